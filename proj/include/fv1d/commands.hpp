#pragma once

#include <string>
#include <vector>

#include "fv1d/config.hpp"
#include "fv1d/diagnostics.hpp"

namespace fv {

// Shared pipeline: build the flux, grid and initial state from cfg and
// advance to cfg.t_final. n_cells_override substitutes the cell count
// (convergence sweeps).
RunHistory execute_run(const RunConfig& cfg, int n_cells_override = 0);

// Runs the requested checks (all applicable ones when the list is empty).
// "incremental" expands to two reports. Convexity-dependent checks
// (quadratic_decay, oscillation) are skipped with a notice for fluxes
// without a positive convexity floor; a broken extremum correspondence is
// surfaced as a failed report, not an exception.
std::vector<DiagnosticReport> run_checks(const RunHistory& h,
                                         const VerifySpec& spec);

// Subcommands. Exit status 0 = success, 1 = a requested check failed;
// configuration and runtime errors propagate as exceptions (the CLI maps
// them to status 2).
int cmd_run(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_paths(const RunConfig& cfg);
int cmd_converge(const RunConfig& cfg);

}  // namespace fv
