#pragma once

#include <Eigen/Dense>

#include "fv1d/flux_model.hpp"

namespace fv {

using Eigen::ArrayXd;

// Uniform 1D cell grid. The mesh ratio lambda = tau/h is stored; the time
// step is derived. Cell j covers [x_min + j h, x_min + (j+1) h].
struct GridSpec {
  int n_cells = 0;
  double h = 0.0;
  double x_min = 0.0;
  double lambda = 0.0;

  double tau() const { return lambda * h; }
  double x_center(int j) const { return x_min + (j + 0.5) * h; }
  double x_edge(int j) const { return x_min + j * h; }
  double x_max() const { return x_min + n_cells * h; }
};

// Validates n_cells >= 5, h > 0, lambda > 0 and finite. Throws ConfigError.
GridSpec make_grid(int n_cells, double h, double x_min, double lambda);

// Cell averages at one time step. time = step * grid.tau().
struct StateSnapshot {
  int step = 0;
  GridSpec grid;
  ArrayXd values;

  double time() const { return step * grid.tau(); }
};

// Sum of absolute neighbor differences (discrete BV seminorm).
double total_variation(const ArrayXd& values);

// max |f'| over the convex hull [min u, max u] of the samples. For convex f
// the maximum sits at an endpoint of the hull.
double sup_speed(const FluxModel& f, const ArrayXd& values);

// h * sum of cell values (the conserved quantity).
double mass(const StateSnapshot& s);

// True when the two outermost cells at each boundary carry equal values
// (the compact-support margin discipline the stepper enforces).
bool margins_constant(const StateSnapshot& s);

}  // namespace fv
