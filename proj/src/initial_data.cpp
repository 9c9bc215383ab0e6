#include "fv1d/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fv1d/errors.hpp"
#include "fv1d/quadrature.hpp"

namespace fv {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// erf(b) - erf(a) without cancellation in the tails (erf saturates at +-1,
// erfc does not).
double erf_diff(double a, double b) {
  if (a >= 0.0 && b >= 0.0) return std::erfc(a) - std::erfc(b);
  if (a <= 0.0 && b <= 0.0) return std::erfc(-b) - std::erfc(-a);
  return std::erf(b) - std::erf(a);
}

// Integral over [xa, xb] of amplitude * exp(-((x-c)/w)^2).
double bump_integral(const GaussianBump& b, double xa, double xb) {
  return b.amplitude * b.width * 0.5 * kSqrtPi *
         erf_diff((xa - b.center) / b.width, (xb - b.center) / b.width);
}

ArrayXd project_riemann(double left, double right, double x0,
                        const GridSpec& g) {
  ArrayXd u(g.n_cells);
  for (int j = 0; j < g.n_cells; ++j) {
    const double a = g.x_edge(j), b = g.x_edge(j + 1);
    if (b <= x0) {
      u[j] = left;
    } else if (a >= x0) {
      u[j] = right;
    } else {
      u[j] = (left * (x0 - a) + right * (b - x0)) / g.h;
    }
  }
  return u;
}

// Integral of the piecewise-linear interpolant through pts over [a, b],
// with constant extension outside the breakpoint range.
double affine_integral(const std::vector<std::pair<double, double>>& pts,
                       double a, double b) {
  auto value_at = [&](double x) {
    if (x <= pts.front().first) return pts.front().second;
    if (x >= pts.back().first) return pts.back().second;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const auto [x0, u0] = pts[k];
      const auto [x1, u1] = pts[k + 1];
      if (x <= x1) {
        return x1 == x0 ? u1 : u0 + (u1 - u0) * (x - x0) / (x1 - x0);
      }
    }
    return pts.back().second;
  };
  // Collect the integration nodes: interval ends plus interior breakpoints.
  std::vector<double> nodes{a};
  for (const auto& [x, u] : pts) {
    (void)u;
    if (x > a && x < b) nodes.push_back(x);
  }
  nodes.push_back(b);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const double lo = nodes[k], hi = nodes[k + 1];
    total += 0.5 * (value_at(lo) + value_at(hi)) * (hi - lo);
  }
  return total;
}

}  // namespace

ArrayXd project_initial(const std::function<double(double)>& u0,
                        const GridSpec& g) {
  ArrayXd u(g.n_cells);
  for (int j = 0; j < g.n_cells; ++j) {
    const double a = g.x_edge(j), b = g.x_edge(j + 1);
    u[j] = integrate(u0, a, b, 1e-12 * g.h) / g.h;
    if (!std::isfinite(u[j])) {
      throw ConfigError("initial data produced a non-finite cell average");
    }
  }
  return u;
}

ArrayXd project_preset(const InitialData& d, const GridSpec& g) {
  using Kind = InitialData::Kind;
  switch (d.kind) {
    case Kind::constant:
      return ArrayXd::Constant(g.n_cells, d.value);
    case Kind::riemann:
      return project_riemann(d.left, d.right, d.x0, g);
    case Kind::piecewise_affine: {
      if (d.breakpoints.size() < 2) {
        throw ConfigError("piecewise_affine needs at least two breakpoints");
      }
      auto pts = d.breakpoints;
      std::sort(pts.begin(), pts.end());
      ArrayXd u(g.n_cells);
      for (int j = 0; j < g.n_cells; ++j) {
        u[j] = affine_integral(pts, g.x_edge(j), g.x_edge(j + 1)) / g.h;
      }
      return u;
    }
    case Kind::gaussian:
    case Kind::bump_sum: {
      if (d.bumps.empty()) {
        throw ConfigError("gaussian preset needs at least one bump");
      }
      ArrayXd u = ArrayXd::Constant(g.n_cells, d.baseline);
      double scale = 0.0;
      for (const auto& b : d.bumps) {
        if (!(b.width > 0.0)) {
          throw ConfigError("gaussian bump width must be positive");
        }
        scale += std::abs(b.amplitude);
        for (int j = 0; j < g.n_cells; ++j) {
          u[j] += bump_integral(b, g.x_edge(j), g.x_edge(j + 1)) / g.h;
        }
      }
      // Differencing the antiderivative leaves ~1e-15-relative noise in the
      // tails, which would read as spurious extrema; snap those cells flat.
      for (int j = 0; j < g.n_cells; ++j) {
        if (std::abs(u[j] - d.baseline) <= 1e-13 * scale) u[j] = d.baseline;
      }
      return u;
    }
    case Kind::spike: {
      ArrayXd u = ArrayXd::Constant(g.n_cells, d.baseline);
      u[g.n_cells / 2] += d.amplitude;
      return u;
    }
    case Kind::smoothstep: {
      if (!(d.width > 0.0)) {
        throw ConfigError("smoothstep width must be positive");
      }
      // u(x) = left + (right-left) * (1 + erf((x-x0)/width)) / 2. The cell
      // average is evaluated against the nearer flat level so the tails do
      // not suffer cancellation (the primitive grows linearly in x):
      // left + C (p(zb)-p(za))/h with p(z) = z erfc(-z) + exp(-z^2)/sqrt(pi)
      // vanishing at -inf, or right + C (q(zb)-q(za))/h with
      // q(z) = p(z) - 2z vanishing at +inf.
      auto p = [](double z) {
        return z * std::erfc(-z) + std::exp(-z * z) / kSqrtPi;
      };
      auto q = [](double z) {
        return -z * std::erfc(z) + std::exp(-z * z) / kSqrtPi;
      };
      const double c = (d.right - d.left) * 0.5 * d.width;
      ArrayXd u(g.n_cells);
      const double tol = 1e-13 * std::abs(d.right - d.left);
      for (int j = 0; j < g.n_cells; ++j) {
        const double za = (g.x_edge(j) - d.x0) / d.width;
        const double zb = (g.x_edge(j + 1) - d.x0) / d.width;
        u[j] = za + zb <= 0.0 ? d.left + c * (p(zb) - p(za)) / g.h
                              : d.right + c * (q(zb) - q(za)) / g.h;
        // Snap residual rounding noise in the tails to the exact levels.
        if (std::abs(u[j] - d.left) <= tol) u[j] = d.left;
        if (std::abs(u[j] - d.right) <= tol) u[j] = d.right;
      }
      return u;
    }
    case Kind::random_bv:
      return random_bv_values(d.seed, g.n_cells, d.max_extrema);
  }
  throw ConfigError("unknown initial data preset");
}

StateSnapshot make_initial(const InitialData& d, const GridSpec& g) {
  return StateSnapshot{0, g, project_preset(d, g)};
}

ArrayXd random_bv_values(std::uint64_t seed, int n_cells, int max_extrema) {
  if (max_extrema < 1) throw ConfigError("max_extrema must be >= 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    // Fixed 53-bit mapping; std::uniform_real_distribution is not pinned
    // across standard library implementations.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  auto uniform_in = [&](double lo, double hi) {
    return lo + (hi - lo) * uniform();
  };
  auto uniform_int = [&](int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  };

  // Interior plateaus live in the middle 60% of the grid, >= 3 cells each.
  const int lo_cell = n_cells / 5;
  const int hi_cell = n_cells - n_cells / 5;
  const int width = hi_cell - lo_cell;
  int plateaus = 1 + uniform_int(max_extrema);
  plateaus = std::min(plateaus, width / 3);
  if (plateaus < 1) {
    throw ConfigError("grid too small for the random BV generator");
  }
  std::vector<int> widths(plateaus, 3);
  for (int extra = width - 3 * plateaus; extra > 0; --extra) {
    widths[uniform_int(plateaus)] += 1;
  }

  // Strictly alternating plateau values; clipping to [-1, 1] cannot break
  // strictness because each clip leaves at least the previous headroom.
  std::vector<double> values(plateaus);
  double prev = 0.0;
  double dir = uniform() < 0.5 ? 1.0 : -1.0;
  for (int k = 0; k < plateaus; ++k) {
    const double step =
        k == 0 ? uniform_in(0.5, 0.9) : uniform_in(0.05, 0.9);
    double v = prev + dir * step;
    v = std::clamp(v, -1.0, 1.0);
    values[k] = v;
    prev = v;
    dir = -dir;
  }

  ArrayXd u = ArrayXd::Zero(n_cells);
  int cell = lo_cell;
  for (int k = 0; k < plateaus; ++k) {
    for (int i = 0; i < widths[k]; ++i) u[cell++] = values[k];
  }
  return u;
}

}  // namespace fv
