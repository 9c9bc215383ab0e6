#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fv1d/initial_data.hpp"
#include "fv1d/stepper.hpp"

namespace fv {

struct VerifySpec {
  std::vector<std::string> checks;  // empty means "all applicable"
  bool entropy_all_cells = false;
};

struct ConvergeSpec {
  std::vector<int> n_list;          // successively doubled cell counts
  std::string reference = "exact";  // "exact" (riemann only) or "oracle"
  int refinement = 16;              // oracle grid refinement factor
};

struct OutputSpec {
  std::string dir = "out";
  bool step_index = false;  // leading step column in snapshots.csv
  bool final_only = false;  // keep only the first and last snapshot rows
};

// Everything a command needs: problem (flux, domain, resolution, horizon,
// initial data), scheme selection, and per-command options.
struct RunConfig {
  std::string flux_name = "burgers";
  double x_min = -1.0;
  double x_max = 1.0;
  int n_cells = 200;
  double t_final = 0.0;
  InitialData initial;
  SchemeConfig scheme;
  VerifySpec verify;
  ConvergeSpec converge;
  OutputSpec output;
};

// Names accepted in VerifySpec::checks.
const std::vector<std::string>& known_check_names();

// Parses the INI dialect (sections [problem] [scheme] [verify] [converge]
// [output]; key = value; '#' comments) or the equivalent JSON object (same
// sections as objects). Unknown sections or keys, malformed values and
// out-of-range settings throw ConfigError.
RunConfig parse_config_text(const std::string& text);

// Reads and parses path ('.json' or a leading '{' selects JSON).
RunConfig load_config(const std::string& path);

// Command-line settings that override file values.
struct CliOverrides {
  std::optional<std::string> scheme;
  std::optional<std::string> flux;
  std::optional<int> n_cells;
  std::optional<double> lambda;
  std::optional<double> cfl;
  std::optional<double> t_final;
  std::optional<double> q_viscosity;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::string> checks;  // comma separated
};

// Applies overrides in place. Setting lambda clears a configured cfl target
// and vice versa; asking for both at once is an error.
void apply_overrides(RunConfig& cfg, const CliOverrides& o);

// Grid built from the domain and cell count (mesh ratio is resolved later by
// the time loop; the stored value is only a placeholder).
GridSpec config_grid(const RunConfig& cfg, int n_cells_override = 0);

}  // namespace fv
