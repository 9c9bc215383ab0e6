#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fv1d/grid.hpp"

namespace fv {

// Exact L2 projection of a pointwise function onto the grid: cell j receives
// (1/h) * integral of u0 over the cell (adaptive quadrature, abs tol
// 1e-12 * h * max(1, |u0|_inf estimate)). Throws ConfigError on non-finite
// samples.
ArrayXd project_initial(const std::function<double(double)>& u0,
                        const GridSpec& g);

// Initial-data presets. Each projects onto a grid with a closed form (no
// quadrature error) except the Gaussian family, which uses the erf
// antiderivative — still exact to rounding.
struct GaussianBump {
  double amplitude = 1.0;
  double center = 0.0;
  double width = 0.1;  // u(x) sums amplitude * exp(-((x-center)/width)^2)
};

struct InitialData {
  enum class Kind {
    constant,          // value
    riemann,           // left for x < x0, right for x > x0
    piecewise_affine,  // linear interpolation through breakpoints,
                       // constant extension outside
    gaussian,          // baseline + one bump
    bump_sum,          // baseline + several bumps
    spike,             // baseline everywhere, baseline+amplitude in the
                       // middle cell (cell n/2)
    smoothstep,        // monotone erf ramp from left to right about x0
    random_bv,         // seeded alternating plateaus, zero margins
  };

  Kind kind = Kind::constant;
  double value = 0.0;                      // constant
  double left = 0.0, right = 0.0;          // riemann / smoothstep levels
  double x0 = 0.0;                         // riemann / smoothstep location
  double width = 1.0;                      // smoothstep ramp scale
  std::vector<std::pair<double, double>> breakpoints;  // piecewise_affine
  double baseline = 0.0;                   // gaussian / bump_sum / spike
  std::vector<GaussianBump> bumps;         // gaussian (1) / bump_sum
  double amplitude = 1.0;                  // spike
  std::uint64_t seed = 0;                  // random_bv
  int max_extrema = 12;                    // random_bv
};

// Cell averages of the preset on the grid (step 0 snapshot values).
ArrayXd project_preset(const InitialData& d, const GridSpec& g);

StateSnapshot make_initial(const InitialData& d, const GridSpec& g);

// Deterministic piecewise-constant BV data: zero two-cell margins, alternating
// plateaus (each >= 3 cells wide) over the central 60% of the grid, values in
// [-1, 1], first plateau magnitude >= 0.5, at most max_extrema local extrema.
// Identical (seed, n_cells, max_extrema) triples give bit-identical arrays.
ArrayXd random_bv_values(std::uint64_t seed, int n_cells, int max_extrema);

}  // namespace fv
