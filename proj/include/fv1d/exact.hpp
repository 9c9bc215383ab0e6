#pragma once

#include <utility>
#include <vector>

#include "fv1d/initial_data.hpp"
#include "fv1d/stepper.hpp"

namespace fv {

// Structure of the exact Riemann solution for convex f.
struct RiemannSolution {
  double left = 0.0;
  double right = 0.0;
  bool is_shock = false;
  double sigma = 0.0;     // shock speed (is_shock)
  double xi_left = 0.0;   // fan edges f'(left), f'(right) (rarefaction)
  double xi_right = 0.0;
};

RiemannSolution solve_riemann(double v, double w, const FluxModel& f);

// Self-similar solution R(xi; v, w) sampled at xi = x/t. At a shock the
// convention is right-continuous: R(sigma) = w, so xi = 0 yields R(0+).
// Inside a fan, inverts f'(u) = xi (closed form for constant curvature).
double riemann_sample(double v, double w, double xi, const FluxModel& f);

// Exact cell averages of the Riemann solution at time T > 0, jump initially
// at x0. Closed form: overlap lengths for constant pieces and, across a fan,
// integral u dxi = [u xi - f(u)] between the fan ends (integration by parts
// using f'(u(xi)) = xi).
ArrayXd exact_riemann_cell_averages(double v, double w, const FluxModel& f,
                                    const GridSpec& g, double T,
                                    double x0 = 0.0);

// Reference solution by brute force: re-projects the preset on a
// refinement-times finer grid, runs Godunov at cfl_target 1/4 to time T, and
// conservatively averages each block of fine cells back onto the coarse grid.
// Grid-bound presets (spike, random_bv) have no continuum refinement and are
// rejected.
ArrayXd fine_grid_oracle(const InitialData& u0, const FluxModel& f,
                         const GridSpec& coarse, double T, int refinement);

// h * sum |a - b| over all cells; the snapshots must share a grid.
double l1_error(const StateSnapshot& a, const ArrayXd& reference);
double l1_error(const StateSnapshot& a, const StateSnapshot& b);

// Observed orders from a halving sequence of (h, error) pairs:
// rate_k = log2(e_k / e_{k+1}). Validates h_k / h_{k+1} = 2 within 1e-9.
// A zero fine error yields +infinity.
std::vector<double> convergence_rates(
    const std::vector<std::pair<double, double>>& h_and_error);

}  // namespace fv
