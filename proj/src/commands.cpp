#include "fv1d/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>

#include "fv1d/entropy.hpp"
#include "fv1d/errors.hpp"
#include "fv1d/exact.hpp"
#include "fv1d/paths.hpp"
#include "fv1d/report_io.hpp"

namespace fv {
namespace {

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.output.dir) / name).string();
}

// Decay / oscillation constants from the flux: alpha = lambda * floor / 2,
// beta = min(alpha, 1/2). Empty when the flux has no positive convexity
// floor (those checks are then skipped).
std::optional<double> decay_alpha(const RunHistory& h) {
  if (!h.flux.strictly_convex || !(h.flux.convexity_floor > 0.0)) {
    return std::nullopt;
  }
  return 0.5 * h.lambda * h.flux.convexity_floor;
}

DiagnosticReport skipped_report(const std::string& check, double lambda,
                                const std::string& notice) {
  DiagnosticReport r;
  r.check = check;
  r.skipped = true;
  r.notice = notice;
  r.params.lambda = lambda;
  return r;
}

DiagnosticReport failed_report(const std::string& check, double lambda,
                               const std::string& notice) {
  DiagnosticReport r;
  r.check = check;
  r.pass = false;
  r.notice = notice;
  r.params.lambda = lambda;
  return r;
}

}  // namespace

RunHistory execute_run(const RunConfig& cfg, int n_cells_override) {
  const FluxModel f = flux_by_name(cfg.flux_name);
  const GridSpec g = config_grid(cfg, n_cells_override);
  const StateSnapshot s0 = make_initial(cfg.initial, g);
  return run(s0, f, cfg.scheme, cfg.t_final);
}

std::vector<DiagnosticReport> run_checks(const RunHistory& h,
                                         const VerifySpec& spec) {
  const std::vector<std::string>& requested =
      spec.checks.empty() ? known_check_names() : spec.checks;

  // Path tracking is shared by the "paths" and "oscillation" checks; a
  // MatchError (the scheme created an extremum) fails both.
  std::optional<PathSet> path_set;
  std::string path_error;
  bool paths_tried = false;
  auto ensure_paths = [&]() {
    if (paths_tried) return;
    paths_tried = true;
    try {
      path_set = build_paths(h);
    } catch (const MatchError& e) {
      path_error = e.what();
    }
  };

  const std::optional<double> alpha = decay_alpha(h);
  const std::string no_floor_notice =
      "flux has no positive convexity floor; check not applicable";

  std::vector<DiagnosticReport> out;
  for (const auto& name : requested) {
    if (name == "strong_max") {
      out.push_back(check_strong_max_principle(h));
    } else if (name == "quadratic_decay") {
      if (!alpha) {
        out.push_back(
            skipped_report("quadratic_decay", h.lambda, no_floor_notice));
      } else {
        out.push_back(check_quadratic_decay(h, *alpha));
      }
    } else if (name == "cell_entropy") {
      const EntropyPair pair = derive_entropy_flux(h.flux, square_entropy());
      out.push_back(check_cell_entropy(h, pair, spec.entropy_all_cells));
    } else if (name == "incremental") {
      for (auto& r : check_incremental_conditions(h)) {
        out.push_back(std::move(r));
      }
    } else if (name == "monotonicity") {
      out.push_back(check_monotonicity_preserving(h));
    } else if (name == "paths") {
      ensure_paths();
      if (!path_set) {
        out.push_back(failed_report(
            "paths", h.lambda,
            "extremum correspondence broke (scheme created an extremum): " +
                path_error));
      } else {
        out.push_back(check_path_structure(h, *path_set));
      }
    } else if (name == "oscillation") {
      if (!alpha) {
        out.push_back(
            skipped_report("oscillation", h.lambda, no_floor_notice));
        continue;
      }
      ensure_paths();
      if (!path_set) {
        out.push_back(failed_report(
            "oscillation", h.lambda,
            "extremum correspondence broke (scheme created an extremum): " +
                path_error));
      } else {
        const double beta = std::min(*alpha, 0.5);
        out.push_back(check_oscillation_bound(*path_set, h, beta));
      }
    } else {
      throw ConfigError("unknown check '" + name + "'");
    }
  }
  return out;
}

int cmd_run(const RunConfig& cfg) {
  const RunHistory h = execute_run(cfg);
  write_file(out_path(cfg, "snapshots.csv"),
             snapshots_to_csv(h, cfg.output.step_index, cfg.output.final_only));
  write_file(out_path(cfg, "summary.json"), summary_to_json(h));
  const StateSnapshot& last = h.final();
  std::printf("run: scheme=%s flux=%s N=%d lambda=%s steps=%d t=%s\n",
              scheme_name(h.scheme).c_str(), h.flux.name.c_str(),
              last.grid.n_cells, format_double(h.lambda).c_str(), h.n_steps,
              format_double(last.time()).c_str());
  std::printf("     TV %s -> %s, max|u| %s -> %s, mass %s -> %s\n",
              format_double(total_variation(h.initial().values)).c_str(),
              format_double(total_variation(last.values)).c_str(),
              format_double(h.initial().values.abs().maxCoeff()).c_str(),
              format_double(last.values.abs().maxCoeff()).c_str(),
              format_double(mass(h.initial())).c_str(),
              format_double(mass(last)).c_str());
  std::printf("     wrote %s and %s\n", out_path(cfg, "snapshots.csv").c_str(),
              out_path(cfg, "summary.json").c_str());
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const RunHistory h = execute_run(cfg);
  const std::vector<DiagnosticReport> reports = run_checks(h, cfg.verify);
  write_file(out_path(cfg, "report.json"),
             report_to_json(reports, scheme_name(h.scheme), h.flux.name,
                            h.lambda));
  bool all_pass = true;
  for (const auto& r : reports) {
    std::printf("%-32s %s\n", r.check.c_str(), r.verdict().c_str());
    if (!r.skipped && !r.pass) {
      all_pass = false;
      const std::size_t show = std::min<std::size_t>(r.violations.size(), 3);
      for (std::size_t k = 0; k < show; ++k) {
        const Violation& v = r.violations[k];
        std::printf("    n=%d j=%d lhs=%s rhs=%s margin=%s\n", v.step, v.cell,
                    format_double(v.lhs).c_str(),
                    format_double(v.rhs).c_str(),
                    format_double(v.margin).c_str());
      }
      if (r.violations.size() > show) {
        std::printf("    ... %zu violations total\n", r.violations.size());
      }
      if (!r.notice.empty()) std::printf("    %s\n", r.notice.c_str());
    }
  }
  std::printf("overall: %s (%s)\n", all_pass ? "pass" : "fail",
              out_path(cfg, "report.json").c_str());
  return all_pass ? 0 : 1;
}

int cmd_paths(const RunConfig& cfg) {
  const RunHistory h = execute_run(cfg);
  PathSet ps;
  try {
    ps = build_paths(h);
  } catch (const MatchError& e) {
    std::fprintf(stderr,
                 "path tracking failed (scheme created an extremum): %s\n",
                 e.what());
    return 1;
  }
  write_file(out_path(cfg, "paths.csv"), paths_to_csv(ps, h));
  int alive = 0;
  for (const auto& p : ps.paths) alive += p.alive_at_end ? 1 : 0;
  std::printf("paths: %zu tracked, %d alive at step %d; wrote %s\n",
              ps.paths.size(), alive, ps.n_steps,
              out_path(cfg, "paths.csv").c_str());
  return 0;
}

int cmd_converge(const RunConfig& cfg) {
  const ConvergeSpec& cv = cfg.converge;
  if (cv.n_list.size() < 3) {
    throw ConfigError("converge needs at least 3 cell counts in N_list");
  }
  for (std::size_t k = 0; k + 1 < cv.n_list.size(); ++k) {
    if (cv.n_list[k + 1] != 2 * cv.n_list[k]) {
      throw ConfigError("converge.N_list must double at every entry");
    }
  }
  if (cv.reference == "exact" &&
      cfg.initial.kind != InitialData::Kind::riemann) {
    throw ConfigError(
        "converge.reference = exact requires the riemann preset");
  }

  const FluxModel f = flux_by_name(cfg.flux_name);
  std::vector<ConvergencePoint> points;
  std::vector<std::pair<double, double>> h_and_error;
  for (const int n : cv.n_list) {
    const RunHistory h = execute_run(cfg, n);
    const StateSnapshot& last = h.final();
    double err = 0.0;
    if (cv.reference == "exact") {
      const ArrayXd exact = exact_riemann_cell_averages(
          cfg.initial.left, cfg.initial.right, f, last.grid, last.time(),
          cfg.initial.x0);
      err = l1_error(last, exact);
    } else {
      const ArrayXd oracle = fine_grid_oracle(cfg.initial, f, last.grid,
                                              last.time(), cv.refinement);
      err = l1_error(last, oracle);
    }
    points.push_back(ConvergencePoint{n, last.grid.h, err, std::nullopt});
    h_and_error.emplace_back(last.grid.h, err);
  }
  const std::vector<double> rates = convergence_rates(h_and_error);
  for (std::size_t k = 0; k < rates.size(); ++k) {
    points[k + 1].rate = rates[k];
  }

  write_file(out_path(cfg, "convergence.csv"), convergence_to_csv(points));
  std::printf("%8s %14s %14s %8s\n", "N", "h", "e_l1", "rate");
  for (const auto& p : points) {
    std::printf("%8d %14s %14s %8s\n", p.n_cells,
                format_double(p.h).c_str(), format_double(p.e_l1).c_str(),
                p.rate ? format_double(*p.rate).c_str() : "-");
  }
  std::printf("wrote %s\n", out_path(cfg, "convergence.csv").c_str());
  return 0;
}

}  // namespace fv
