// Command line front end: run / verify / paths / converge over a config file
// plus overriding flags. Exit status: 0 success, 1 a requested check failed,
// 2 configuration or runtime error.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fv1d/commands.hpp"
#include "fv1d/errors.hpp"

namespace {

struct CommonFlags {
  std::optional<std::string> config;
  fv::CliOverrides overrides;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config,
                  "Config file (INI-style sections or JSON)");
  cmd->add_option("--scheme", flags.overrides.scheme,
                  "godunov | lax_friedrichs | engquist_osher | muscl");
  cmd->add_option("--flux", flags.overrides.flux,
                  "burgers | shifted_burgers | quartic | zero");
  cmd->add_option("--N", flags.overrides.n_cells, "Number of cells");
  cmd->add_option("--lambda", flags.overrides.lambda,
                  "Fixed mesh ratio tau/h (exclusive with --cfl)");
  cmd->add_option("--cfl", flags.overrides.cfl,
                  "CFL target in (0, 1/4]; the step lands on T exactly");
  cmd->add_option("--T", flags.overrides.t_final, "Final time");
  cmd->add_option("--Q", flags.overrides.q_viscosity,
                  "Lax-Friedrichs viscosity coefficient");
  cmd->add_option("--seed", flags.overrides.seed,
                  "Seed for the random_bv preset");
  cmd->add_option("--out", flags.overrides.out_dir, "Output directory");
  cmd->add_option("--checks", flags.overrides.checks,
                  "Comma list: strong_max, quadratic_decay, cell_entropy, "
                  "incremental, monotonicity, paths, oscillation");
}

fv::RunConfig build_config(const CommonFlags& flags) {
  fv::RunConfig cfg;
  if (flags.config) cfg = fv::load_config(*flags.config);
  fv::apply_overrides(cfg, flags.overrides);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite volume schemes for 1d scalar conservation laws: run them, "
      "verify discrete maximum/entropy/extremum-decay properties, track "
      "extremum paths, and measure convergence."};
  app.require_subcommand(1);

  CommonFlags run_flags, verify_flags, paths_flags, converge_flags;
  CLI::App* c_run =
      app.add_subcommand("run", "Advance to T; write snapshots and summary");
  add_common_flags(c_run, run_flags);
  CLI::App* c_verify = app.add_subcommand(
      "verify", "Run and evaluate the requested checks; write report.json");
  add_common_flags(c_verify, verify_flags);
  CLI::App* c_paths = app.add_subcommand(
      "paths", "Run and track extremum paths; write paths.csv");
  add_common_flags(c_paths, paths_flags);
  CLI::App* c_converge = app.add_subcommand(
      "converge", "Error sweep over doubling N against an exact or fine-grid "
                  "reference; write convergence.csv");
  add_common_flags(c_converge, converge_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; bad usage is a
                               // configuration error
  }

  try {
    if (c_run->parsed()) return fv::cmd_run(build_config(run_flags));
    if (c_verify->parsed()) return fv::cmd_verify(build_config(verify_flags));
    if (c_paths->parsed()) return fv::cmd_paths(build_config(paths_flags));
    return fv::cmd_converge(build_config(converge_flags));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
