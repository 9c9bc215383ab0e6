#include "fv1d/grid.hpp"

#include <cmath>

#include "fv1d/errors.hpp"

namespace fv {

GridSpec make_grid(int n_cells, double h, double x_min, double lambda) {
  if (n_cells < 5) {
    throw ConfigError("grid needs at least 5 cells (two-cell margins plus an "
                      "interior)");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ConfigError("grid cell width must be positive and finite");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("mesh ratio lambda must be positive and finite");
  }
  if (!std::isfinite(x_min)) {
    throw ConfigError("grid origin must be finite");
  }
  return GridSpec{n_cells, h, x_min, lambda};
}

double total_variation(const ArrayXd& values) {
  const auto n = values.size();
  if (n < 2) return 0.0;
  return (values.tail(n - 1) - values.head(n - 1)).abs().sum();
}

double sup_speed(const FluxModel& f, const ArrayXd& values) {
  if (values.size() == 0) return 0.0;
  const double lo = values.minCoeff();
  const double hi = values.maxCoeff();
  return std::max(std::abs(f.df(lo)), std::abs(f.df(hi)));
}

double mass(const StateSnapshot& s) { return s.grid.h * s.values.sum(); }

bool margins_constant(const StateSnapshot& s) {
  const auto n = s.values.size();
  if (n < 4) return false;
  return s.values[0] == s.values[1] && s.values[n - 1] == s.values[n - 2];
}

}  // namespace fv
