#include "fv1d/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fv1d/errors.hpp"
#include "fv1d/quadrature.hpp"

namespace fv {

RiemannSolution solve_riemann(double v, double w, const FluxModel& f) {
  RiemannSolution r;
  r.left = v;
  r.right = w;
  if (v > w) {
    r.is_shock = true;
    r.sigma = (f.f(v) - f.f(w)) / (v - w);
  } else {
    r.xi_left = f.df(v);
    r.xi_right = f.df(w);
  }
  return r;
}

namespace {

// Inverts f'(u) = xi on [v, w] (v <= w, xi within the fan).
double fan_value(double v, double w, double xi, const FluxModel& f) {
  if (f.constant_curvature) {
    return f.sonic.value_or(0.0) + xi / *f.constant_curvature;
  }
  try {
    return solve_monotone([&](double u) { return f.df(u) - xi; },
                          [&](double u) { return f.ddf(u); }, v, w,
                          0.5 * (v + w),
                          1e-13 * std::max(1.0, std::abs(xi)));
  } catch (const std::runtime_error& e) {
    throw SolverError(std::string("rarefaction fan inversion: ") + e.what());
  }
}

}  // namespace

double riemann_sample(double v, double w, double xi, const FluxModel& f) {
  if (v == w) return v;
  if (v > w) {
    const double sigma = (f.f(v) - f.f(w)) / (v - w);
    return xi < sigma ? v : w;
  }
  if (xi <= f.df(v)) return v;
  if (xi >= f.df(w)) return w;
  return fan_value(v, w, xi, f);
}

ArrayXd exact_riemann_cell_averages(double v, double w, const FluxModel& f,
                                    const GridSpec& g, double T, double x0) {
  if (!(T > 0.0)) {
    throw ConfigError("exact_riemann_cell_averages needs T > 0");
  }
  ArrayXd u(g.n_cells);
  if (v == w) {
    u.setConstant(v);
    return u;
  }
  if (v > w) {
    const double xs = x0 + (f.f(v) - f.f(w)) / (v - w) * T;
    for (int j = 0; j < g.n_cells; ++j) {
      const double a = g.x_edge(j), b = g.x_edge(j + 1);
      const double left_len = std::clamp(xs - a, 0.0, b - a);
      u[j] = (v * left_len + w * (b - a - left_len)) / g.h;
    }
    return u;
  }
  // Rarefaction: constant states outside [xl, xr], self-similar fan inside.
  const double xl = x0 + f.df(v) * T;
  const double xr = x0 + f.df(w) * T;
  auto fan_integral = [&](double p, double q) {
    // integral of u over x in [p, q] subset of [xl, xr].
    const double xip = (p - x0) / T, xiq = (q - x0) / T;
    const double up = fan_value(v, w, std::clamp(xip, f.df(v), f.df(w)), f);
    const double uq = fan_value(v, w, std::clamp(xiq, f.df(v), f.df(w)), f);
    return T * (uq * xiq - f.f(uq) - up * xip + f.f(up));
  };
  for (int j = 0; j < g.n_cells; ++j) {
    const double a = g.x_edge(j), b = g.x_edge(j + 1);
    double total = 0.0;
    const double left_len = std::clamp(xl - a, 0.0, b - a);
    total += v * left_len;
    const double right_len = std::clamp(b - xr, 0.0, b - a);
    total += w * right_len;
    const double fan_lo = std::max(a, xl), fan_hi = std::min(b, xr);
    if (fan_hi > fan_lo) total += fan_integral(fan_lo, fan_hi);
    u[j] = total / g.h;
  }
  return u;
}

ArrayXd fine_grid_oracle(const InitialData& u0, const FluxModel& f,
                         const GridSpec& coarse, double T, int refinement) {
  if (refinement < 8) throw ConfigError("oracle refinement must be >= 8");
  if (u0.kind == InitialData::Kind::spike ||
      u0.kind == InitialData::Kind::random_bv) {
    throw ConfigError(
        "fine_grid_oracle: preset is grid-bound and has no continuum "
        "refinement");
  }
  GridSpec fine = make_grid(coarse.n_cells * refinement, coarse.h / refinement,
                            coarse.x_min, 1.0);
  SchemeConfig cfg;
  cfg.scheme = Scheme::godunov;
  cfg.cfl_target = 0.25;
  const StateSnapshot fin = run_final(make_initial(u0, fine), f, cfg, T);
  const ArrayXd& fv = fin.values;
  ArrayXd out(coarse.n_cells);
  for (int j = 0; j < coarse.n_cells; ++j) {
    out[j] = fv.segment(static_cast<Eigen::Index>(j) * refinement, refinement)
                 .mean();
  }
  return out;
}

double l1_error(const StateSnapshot& a, const ArrayXd& reference) {
  if (a.values.size() != reference.size()) {
    throw ConfigError("l1_error: size mismatch");
  }
  return a.grid.h * (a.values - reference).abs().sum();
}

double l1_error(const StateSnapshot& a, const StateSnapshot& b) {
  if (a.grid.n_cells != b.grid.n_cells ||
      std::abs(a.grid.h - b.grid.h) > 1e-12 * a.grid.h ||
      std::abs(a.grid.x_min - b.grid.x_min) > 1e-12 * (1.0 + std::abs(a.grid.x_min))) {
    throw ConfigError("l1_error: snapshots live on different grids");
  }
  return l1_error(a, b.values);
}

std::vector<double> convergence_rates(
    const std::vector<std::pair<double, double>>& h_and_error) {
  std::vector<double> rates;
  for (std::size_t k = 0; k + 1 < h_and_error.size(); ++k) {
    const auto [h0, e0] = h_and_error[k];
    const auto [h1, e1] = h_and_error[k + 1];
    if (std::abs(h0 / h1 - 2.0) > 1e-9) {
      throw ConfigError("convergence_rates: grids must halve h");
    }
    if (e1 == 0.0) {
      rates.push_back(std::numeric_limits<double>::infinity());
    } else {
      rates.push_back(std::log2(e0 / e1));
    }
  }
  return rates;
}

}  // namespace fv
