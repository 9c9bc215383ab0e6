#include "fv1d/fluxes.hpp"

#include <algorithm>
#include <cmath>

#include "fv1d/errors.hpp"
#include "fv1d/extrema.hpp"
#include "fv1d/quadrature.hpp"

namespace fv {

Scheme scheme_by_name(const std::string& name) {
  if (name == "godunov") return Scheme::godunov;
  if (name == "lax_friedrichs") return Scheme::lax_friedrichs;
  if (name == "engquist_osher") return Scheme::engquist_osher;
  if (name == "muscl") return Scheme::muscl;
  throw ConfigError("unknown scheme: " + name);
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::godunov: return "godunov";
    case Scheme::lax_friedrichs: return "lax_friedrichs";
    case Scheme::engquist_osher: return "engquist_osher";
    case Scheme::muscl: return "muscl";
  }
  return "?";
}

double minmod(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

double godunov_flux(double v, double w, const FluxModel& f) {
  if (v == w) return f.f(v);
  if (v < w) {
    if (f.sonic && *f.sonic > v && *f.sonic < w) return f.f(*f.sonic);
    return std::min(f.f(v), f.f(w));
  }
  return std::max(f.f(v), f.f(w));
}

double lax_friedrichs_flux(double v, double w, const FluxModel& f, double Q,
                           double lambda) {
  return 0.5 * (f.f(v) + f.f(w)) - Q / (2.0 * lambda) * (w - v);
}

double engquist_osher_flux(double v, double w, const FluxModel& f) {
  if (!f.sonic) {
    // One-signed f': plain upwinding.
    const double mid =
        0.5 * (f.working_range.first + f.working_range.second);
    return f.df(mid) >= 0.0 ? f.f(v) : f.f(w);
  }
  const double s = *f.sonic;
  return f.f(std::max(v, s)) + f.f(std::min(w, s)) - f.f(s);
}

Reconstruction muscl_reconstruct(const StateSnapshot& s) {
  const int n = static_cast<int>(s.values.size());
  const ArrayXd& u = s.values;
  Reconstruction r;
  r.slopes = ArrayXd::Zero(n);
  for (int j = 1; j + 1 < n; ++j) {
    r.slopes[j] =
        minmod(u[j] - u[j - 1], 0.5 * (u[j + 1] - u[j - 1]), u[j + 1] - u[j]);
  }
  r.left_face.resize(n + 1);
  r.right_face.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    const int jl = std::max(i - 1, 0);
    const int jr = std::min(i, n - 1);
    const double sl = (i == 0) ? 0.0 : r.slopes[jl];
    const double sr = (i == n) ? 0.0 : r.slopes[jr];
    r.left_face[i] = u[jl] + 0.5 * sl;
    r.right_face[i] = u[jr] - 0.5 * sr;
  }
  return r;
}

double muscl_interface_solve(double u_side, double slope, const FluxModel& f,
                             double lambda) {
  if (slope == 0.0) return u_side;
  if (f.constant_curvature) {
    // f'(v) = a (v - omega): the defining equation is linear in v.
    const double a = *f.constant_curvature;
    const double omega = f.sonic.value_or(0.0);
    const double k = 0.5 * lambda * a * slope;
    return (u_side + k * omega) / (1.0 + k);
  }
  const double mag = std::abs(slope);
  try {
    return solve_monotone(
        [&](double v) { return v + 0.5 * lambda * f.df(v) * slope - u_side; },
        [&](double v) { return 1.0 + 0.5 * lambda * f.ddf(v) * slope; },
        u_side - mag, u_side + mag, u_side,
        1e-13 * std::max(1.0, std::abs(u_side)));
  } catch (const std::runtime_error& e) {
    throw SolverError(std::string("muscl interface solve: ") + e.what());
  }
}

namespace {

InterfaceFluxes muscl_fluxes(const StateSnapshot& s, const FluxModel& f) {
  const int n = static_cast<int>(s.values.size());
  const double lambda = s.grid.lambda;
  const ArrayXd& u = s.values;
  const Reconstruction rec = muscl_reconstruct(s);

  // Cells belonging to a local-extremum plateau. The scheme drops to the
  // first-order Godunov flux on every interface flanking such a cell, which
  // keeps the flux a two-point function at extrema.
  std::vector<char> at_extremum(n, 0);
  for (const auto& e : detect_extrema(u)) {
    for (int j = e.first_cell; j <= e.last_cell; ++j) at_extremum[j] = 1;
  }

  InterfaceFluxes out;
  out.scheme = Scheme::muscl;
  out.g.resize(n + 1);
  out.muscl.assign(n + 1, {});
  for (int i = 0; i <= n; ++i) {
    const int jl = std::max(i - 1, 0);
    const int jr = std::min(i, n - 1);
    const double ul = u[jl], ur = u[jr];
    MusclInterface& info = out.muscl[i];
    if (at_extremum[jl] || at_extremum[jr]) {
      info.tag = MusclCase::extremum;
      out.g[i] = godunov_flux(ul, ur, f);
      continue;
    }
    const double lf = rec.left_face[i];
    const double rf = rec.right_face[i];
    if (f.df(lf) >= 0.0 && f.df(ul) >= 0.0 && f.df(ur) >= 0.0) {
      const double slope = (i == 0) ? 0.0 : rec.slopes[jl];
      const double v = muscl_interface_solve(lf, slope, f, lambda);
      info.tag = MusclCase::right_going;
      info.traced = v;
      out.g[i] = f.f(lf) + f.df(lf) * (v - lf);
    } else if (f.df(rf) <= 0.0 && f.df(ul) <= 0.0 && f.df(ur) <= 0.0) {
      const double slope = (i == n) ? 0.0 : rec.slopes[jr];
      const double v = muscl_interface_solve(rf, slope, f, lambda);
      info.tag = MusclCase::left_going;
      info.traced = v;
      out.g[i] = f.f(rf) + f.df(rf) * (v - rf);
    } else {
      info.tag = MusclCase::sonic;
      out.g[i] = godunov_flux(ul, ur, f);
    }
  }
  return out;
}

}  // namespace

InterfaceFluxes interface_fluxes(const StateSnapshot& s, const FluxModel& f,
                                 Scheme scheme, double q_viscosity) {
  if (scheme == Scheme::muscl) return muscl_fluxes(s, f);
  const int n = static_cast<int>(s.values.size());
  InterfaceFluxes out;
  out.scheme = scheme;
  out.g.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double ul = s.values[std::max(i - 1, 0)];
    const double ur = s.values[std::min(i, n - 1)];
    switch (scheme) {
      case Scheme::godunov:
        out.g[i] = godunov_flux(ul, ur, f);
        break;
      case Scheme::lax_friedrichs:
        out.g[i] = lax_friedrichs_flux(ul, ur, f, q_viscosity, s.grid.lambda);
        break;
      case Scheme::engquist_osher:
        out.g[i] = engquist_osher_flux(ul, ur, f);
        break;
      case Scheme::muscl:
        break;  // handled above
    }
  }
  return out;
}

IncrementalForm incremental_coefficients(const StateSnapshot& s,
                                         const InterfaceFluxes& fluxes,
                                         const FluxModel& f) {
  const int n = static_cast<int>(s.values.size());
  const double lambda = s.grid.lambda;
  IncrementalForm out;
  out.c_plus = ArrayXd::Zero(n + 1);
  out.c_minus = ArrayXd::Zero(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double ul = s.values[std::max(i - 1, 0)];
    const double ur = s.values[std::min(i, n - 1)];
    const double d = ur - ul;
    if (d != 0.0) {
      out.c_plus[i] = -lambda * (fluxes.g[i] - f.f(ul)) / d;
      out.c_minus[i] = lambda * (f.f(ur) - fluxes.g[i]) / d;
    }
  }
  out.q = out.c_plus + out.c_minus;
  return out;
}

}  // namespace fv
