#include "fv1d/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "fv1d/errors.hpp"
#include "fv1d/exact.hpp"

namespace fv {
namespace {

std::vector<int> extrema_counts(const RunHistory& h) {
  std::vector<int> counts;
  counts.reserve(h.snapshots.size());
  for (const auto& s : h.snapshots) {
    counts.push_back(static_cast<int>(detect_extrema(s.values).size()));
  }
  return counts;
}

DiagnosticReport new_report(const std::string& check, const RunHistory& h) {
  DiagnosticReport r;
  r.check = check;
  r.extrema_per_step = extrema_counts(h);
  r.params.lambda = h.lambda;
  if (h.scheme == Scheme::lax_friedrichs) r.params.q_viscosity = h.q_viscosity;
  return r;
}

void finish(DiagnosticReport& r) { r.pass = r.violations.empty(); }

// Maximal runs on which u is monotone in the given sense (length >= 2).
std::vector<std::pair<int, int>> maximal_monotone_runs(const ArrayXd& u,
                                                       bool nondecreasing) {
  std::vector<std::pair<int, int>> runs;
  const int n = static_cast<int>(u.size());
  int start = 0;
  for (int j = 0; j + 1 < n; ++j) {
    const bool ok = nondecreasing ? u[j + 1] >= u[j] : u[j + 1] <= u[j];
    if (!ok) {
      if (j > start) runs.push_back({start, j});
      start = j + 1;
    }
  }
  if (n - 1 > start) runs.push_back({start, n - 1});
  return runs;
}

}  // namespace

double check_tolerance(const RunHistory& h) {
  double scale = 1.0;
  for (const auto& s : h.snapshots) {
    if (s.values.size()) scale = std::max(scale, s.values.abs().maxCoeff());
  }
  return 1e-12 * scale;
}

DiagnosticReport check_strong_max_principle(const RunHistory& h) {
  DiagnosticReport r = new_report("strong_max", h);
  const double tol = check_tolerance(h);
  for (int n = 0; n + 1 < static_cast<int>(h.snapshots.size()); ++n) {
    const ArrayXd& u = h.snapshots[n].values;
    const ArrayXd& v = h.snapshots[n + 1].values;
    for (int j = 1; j + 1 < static_cast<int>(u.size()); ++j) {
      const double dp = u[j + 1] - u[j];
      const double dm = u[j - 1] - u[j];
      const double lo = 0.5 * std::min({dp, dm, 0.0});
      const double hi = 0.5 * std::max({dp, dm, 0.0});
      const double d = v[j] - u[j];
      if (d < lo - tol) {
        r.violations.push_back({r.check, n, j, lo, d, lo - d});
      } else if (d > hi + tol) {
        r.violations.push_back({r.check, n, j, d, hi, d - hi});
      }
    }
  }
  finish(r);
  return r;
}

DiagnosticReport check_quadratic_decay(const RunHistory& h, double alpha) {
  if (!(alpha > 0.0)) {
    throw ConfigError("quadratic decay check needs alpha > 0");
  }
  DiagnosticReport r = new_report("quadratic_decay", h);
  r.params.alpha = alpha;
  const double tol = check_tolerance(h);
  for (int n = 0; n + 1 < static_cast<int>(h.snapshots.size()); ++n) {
    const ArrayXd& u = h.snapshots[n].values;
    const ArrayXd& v = h.snapshots[n + 1].values;
    for (const auto& e : detect_extrema(u)) {
      for (int j = e.first_cell; j <= e.last_cell; ++j) {
        const double dm = u[j] - u[j - 1];
        const double dp = u[j] - u[j + 1];
        const double need = alpha * std::min(dm * dm, dp * dp);
        if (e.is_max) {
          const double bound = u[j] - need;
          if (v[j] > bound + tol) {
            r.violations.push_back({r.check, n, j, v[j], bound, v[j] - bound});
          }
        } else {
          const double bound = u[j] + need;
          if (v[j] < bound - tol) {
            r.violations.push_back({r.check, n, j, bound, v[j], bound - v[j]});
          }
        }
      }
    }
  }
  finish(r);
  return r;
}

ArrayXd entropy_interface_fluxes(const StateSnapshot& s, const FluxModel& f,
                                 Scheme scheme, double q_viscosity,
                                 const EntropyPair& pair) {
  const int n = static_cast<int>(s.values.size());
  const ArrayXd& u = s.values;
  ArrayXd G(n + 1);
  auto riemann_G = [&](double ul, double ur) {
    return pair.F(riemann_sample(ul, ur, 0.0, f));
  };
  if (scheme == Scheme::muscl) {
    const InterfaceFluxes fl = interface_fluxes(s, f, scheme, q_viscosity);
    const Reconstruction rec = muscl_reconstruct(s);
    for (int i = 0; i <= n; ++i) {
      const double ul = u[std::max(i - 1, 0)];
      const double ur = u[std::min(i, n - 1)];
      const MusclInterface& info = fl.muscl[i];
      switch (info.tag) {
        case MusclCase::right_going: {
          const double b = rec.left_face[i];
          G[i] = pair.F(b) +
                 pair.entropy.dU(b) * (f.f(info.traced) - f.f(b));
          break;
        }
        case MusclCase::left_going: {
          const double b = rec.right_face[i];
          G[i] = pair.F(b) +
                 pair.entropy.dU(b) * (f.f(info.traced) - f.f(b));
          break;
        }
        case MusclCase::sonic:
        case MusclCase::extremum:
          G[i] = riemann_G(ul, ur);
          break;
      }
    }
    return G;
  }
  for (int i = 0; i <= n; ++i) {
    const double ul = u[std::max(i - 1, 0)];
    const double ur = u[std::min(i, n - 1)];
    switch (scheme) {
      case Scheme::godunov:
        G[i] = riemann_G(ul, ur);
        break;
      case Scheme::engquist_osher: {
        if (f.sonic) {
          const double w = *f.sonic;
          G[i] = pair.F(std::max(ul, w)) + pair.F(std::min(ur, w)) -
                 pair.F(w);
        } else {
          const double mid =
              0.5 * (f.working_range.first + f.working_range.second);
          G[i] = f.df(mid) >= 0.0 ? pair.F(ul) : pair.F(ur);
        }
        break;
      }
      case Scheme::lax_friedrichs:
        G[i] = 0.5 * (pair.F(ul) + pair.F(ur)) -
               q_viscosity / (2.0 * s.grid.lambda) *
                   (pair.entropy.U(ur) - pair.entropy.U(ul));
        break;
      case Scheme::muscl:
        break;  // handled above
    }
  }
  return G;
}

DiagnosticReport check_cell_entropy(const RunHistory& h,
                                    const EntropyPair& pair, bool all_cells) {
  DiagnosticReport r = new_report("cell_entropy", h);
  if (h.scheme == Scheme::lax_friedrichs && h.q_viscosity > 0.25) {
    r.skipped = true;
    r.notice =
        "lax_friedrichs with Q > 1/4 has no entropy flux in the verified "
        "regime; check skipped";
    return r;
  }
  const double tol = 100.0 * check_tolerance(h);  // 1e-10 * scale
  const double lambda = h.lambda;
  for (int n = 0; n + 1 < static_cast<int>(h.snapshots.size()); ++n) {
    const StateSnapshot& sn = h.snapshots[n];
    const ArrayXd& u = sn.values;
    const ArrayXd& v = h.snapshots[n + 1].values;
    const int cells = static_cast<int>(u.size());
    std::vector<char> in_region(cells, 0);
    if (all_cells) {
      std::fill(in_region.begin(), in_region.end(), 1);
    } else {
      for (const auto& seg : classify_monotone_segments(u).segments) {
        if (!seg.nondecreasing) continue;
        for (int j = seg.first_cell; j <= seg.last_cell; ++j) in_region[j] = 1;
      }
      for (const auto& e : detect_extrema(u)) {
        for (int j = e.first_cell; j <= e.last_cell; ++j) in_region[j] = 1;
      }
    }
    const ArrayXd G =
        entropy_interface_fluxes(sn, h.flux, h.scheme, h.q_viscosity, pair);
    for (int j = 1; j + 1 < cells; ++j) {
      if (!in_region[j]) continue;
      const double res = pair.entropy.U(v[j]) - pair.entropy.U(u[j]) +
                         lambda * (G[j + 1] - G[j]);
      if (res > tol) {
        r.violations.push_back({r.check, n, j, res, 0.0, res});
      }
    }
  }
  finish(r);
  return r;
}

std::vector<DiagnosticReport> check_incremental_conditions(
    const RunHistory& h) {
  DiagnosticReport cell_form = new_report("incremental_coefficient_bounds", h);
  DiagnosticReport visc_form = new_report("incremental_viscosity_bound", h);
  const double tol = check_tolerance(h);
  for (int n = 0; n + 1 < static_cast<int>(h.snapshots.size()); ++n) {
    const StateSnapshot& sn = h.snapshots[n];
    const InterfaceFluxes fl =
        interface_fluxes(sn, h.flux, h.scheme, h.q_viscosity);
    const IncrementalForm inc = incremental_coefficients(sn, fl, h.flux);
    const int cells = static_cast<int>(sn.values.size());
    // Cell form: C+ at the right interface and C- at the left interface of
    // each interior cell must be nonnegative and sum to at most 1/2.
    for (int j = 1; j + 1 < cells; ++j) {
      const double cp = inc.c_plus[j + 1];
      const double cm = inc.c_minus[j];
      if (cp < -tol) {
        cell_form.violations.push_back({cell_form.check, n, j, 0.0, cp, -cp});
      }
      if (cm < -tol) {
        cell_form.violations.push_back({cell_form.check, n, j, 0.0, cm, -cm});
      }
      if (cp + cm > 0.5 + tol) {
        cell_form.violations.push_back(
            {cell_form.check, n, j, cp + cm, 0.5, cp + cm - 0.5});
      }
    }
    // Viscosity form per interface (recorded under the interface's right
    // cell index).
    for (int i = 1; i + 1 <= cells - 1; ++i) {
      const double cp = inc.c_plus[i];
      const double cm = inc.c_minus[i];
      if (cp < -tol) {
        visc_form.violations.push_back({visc_form.check, n, i, 0.0, cp, -cp});
      }
      if (cm < -tol) {
        visc_form.violations.push_back({visc_form.check, n, i, 0.0, cm, -cm});
      }
      if (inc.q[i] > 0.25 + tol) {
        visc_form.violations.push_back(
            {visc_form.check, n, i, inc.q[i], 0.25, inc.q[i] - 0.25});
      }
    }
  }
  finish(cell_form);
  finish(visc_form);
  return {cell_form, visc_form};
}

DiagnosticReport check_monotonicity_preserving(const RunHistory& h) {
  DiagnosticReport r = new_report("monotonicity", h);
  for (int n = 0; n + 1 < static_cast<int>(h.snapshots.size()); ++n) {
    const ArrayXd& u = h.snapshots[n].values;
    const ArrayXd& v = h.snapshots[n + 1].values;
    for (const bool nondecreasing : {true, false}) {
      for (const auto& [j1, j2] : maximal_monotone_runs(u, nondecreasing)) {
        for (int k = j1 + 1; k + 1 <= j2 - 1; ++k) {
          const bool ok = nondecreasing ? v[k + 1] >= v[k] : v[k + 1] <= v[k];
          if (!ok) {
            if (nondecreasing) {
              r.violations.push_back(
                  {r.check, n, k, v[k], v[k + 1], v[k] - v[k + 1]});
            } else {
              r.violations.push_back(
                  {r.check, n, k, v[k + 1], v[k], v[k + 1] - v[k]});
            }
          }
        }
      }
    }
    // Extrema must not be created (per kind).
    const auto prev = detect_extrema(u);
    const auto next = detect_extrema(v);
    auto count = [](const std::vector<ExtremumRecord>& es, bool is_max) {
      return static_cast<int>(
          std::count_if(es.begin(), es.end(),
                        [&](const ExtremumRecord& e) { return e.is_max == is_max; }));
    };
    for (const bool is_max : {true, false}) {
      const int before = count(prev, is_max);
      const int after = count(next, is_max);
      if (after > before) {
        const int cell = next.empty() ? 0 : next.front().representative();
        r.violations.push_back({r.check, n, cell, static_cast<double>(after),
                                static_cast<double>(before),
                                static_cast<double>(after - before)});
      }
    }
  }
  finish(r);
  return r;
}

}  // namespace fv
