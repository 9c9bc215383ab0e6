#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fv1d/diagnostics.hpp"
#include "fv1d/paths.hpp"
#include "fv1d/stepper.hpp"

namespace fv {

// Shortest round-trip decimal form of x (std::to_chars). Locale independent
// and bit-faithful, so identical runs serialize to byte-identical files.
std::string format_double(double x);

// Machine-readable verification report:
// {
//   "overall": "pass" | "fail",
//   "params":  {"scheme": ..., "flux": ..., "lambda": ...},
//   "reports": [
//     {"check": ..., "verdict": "pass" | "fail" | "skipped",
//      "notice": ...,                      (present when non-empty)
//      "violations": [{"n":, "j":, "lhs":, "rhs":, "margin":}, ...],
//      "params": {"lambda":, "alpha":?, "beta":?, "Q":?},
//      "extrema_per_step": [...]}          (present when non-empty)
//   ]
// }
// A skipped check does not count against "overall".
std::string report_to_json(const std::vector<DiagnosticReport>& reports,
                           const std::string& scheme_name,
                           const std::string& flux_name, double lambda);

// Parses report_to_json output back into reports (round-trip support for
// downstream tooling). Throws ConfigError on malformed input.
std::vector<DiagnosticReport> reports_from_json(const std::string& text);

// Per-run summary: grid/scheme parameters plus total variation, max norm and
// mass of every stored snapshot.
std::string summary_to_json(const RunHistory& h);

// Snapshot table. Columns t,x,u (plus a leading step column n when
// with_step_index). One row per cell per stored snapshot; final_only keeps
// only steps 0 and n_steps.
std::string snapshots_to_csv(const RunHistory& h, bool with_step_index,
                             bool final_only);

// Path table, one row per (path, step): q (path id), kind (max|min), n, t,
// J (representative cell), x (cell center), w (extremum value), epsilon
// (0 or 1 shift), alive (0 on the last row of a terminated path, else 1).
std::string paths_to_csv(const PathSet& ps, const RunHistory& h);

struct ConvergencePoint {
  int n_cells = 0;
  double h = 0.0;
  double e_l1 = 0.0;
  std::optional<double> rate;  // vs the previous (coarser) row
};

// Columns N,h,e_l1,rate; the first row's rate field is empty, and an
// infinite rate (exactly zero fine-grid error) serializes as "inf".
std::string convergence_to_csv(const std::vector<ConvergencePoint>& pts);

// Writes content to path, creating parent directories. Throws RunError on
// filesystem failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace fv
