#pragma once

#include <string>
#include <vector>

#include "fv1d/grid.hpp"

namespace fv {

enum class Scheme { godunov, lax_friedrichs, engquist_osher, muscl };

Scheme scheme_by_name(const std::string& name);
std::string scheme_name(Scheme s);

// Three-argument minmod: the smallest-magnitude argument when all three share
// a strict sign, 0 otherwise.
double minmod(double a, double b, double c);

// First-order numerical fluxes g(v, w) for left state v, right state w.
// Godunov: min of f over [v, w] when v <= w (f(sonic) if the sonic point is
// interior), max(f(v), f(w)) when v > w.
double godunov_flux(double v, double w, const FluxModel& f);

// 0.5 (f(v) + f(w)) - (Q / (2 lambda)) (w - v); Q is the viscosity constant.
double lax_friedrichs_flux(double v, double w, const FluxModel& f, double Q,
                           double lambda);

// f(max(v, sonic)) + f(min(w, sonic)) - f(sonic).
double engquist_osher_flux(double v, double w, const FluxModel& f);

// Second-order reconstruction: minmod-limited slopes (forced to 0 in the two
// boundary cells) and one-sided interface values. Interface i in [0, n_cells]
// sits between cells i-1 and i (ghost copies of the edge cells outside).
struct Reconstruction {
  ArrayXd slopes;      // n_cells
  ArrayXd left_face;   // n_cells + 1; u_{i-1} + s_{i-1}/2 at interface i
  ArrayXd right_face;  // n_cells + 1; u_i - s_i/2 at interface i
};

Reconstruction muscl_reconstruct(const StateSnapshot& s);

// Foot point of the characteristic through the half-time-step interface
// value: solves v + (lambda/2) f'(v) * slope = u_side. Closed form for
// constant-curvature fluxes, safeguarded Newton otherwise (SolverError on
// failure). Requires lambda * sup|f'| <= 1/4 for the bracket to be valid.
double muscl_interface_solve(double u_side, double slope, const FluxModel& f,
                             double lambda);

// How each MUSCL interface was classified.
//   right_going: all relevant speeds >= 0, flux from the left reconstruction
//   left_going:  mirrored with the right reconstruction
//   sonic:       mixed signs; first-order Godunov flux on the cell averages
//   extremum:    a flanking cell belongs to a local-extremum plateau;
//                first-order Godunov flux on the cell averages
enum class MusclCase { right_going, left_going, sonic, extremum };

struct MusclInterface {
  MusclCase tag = MusclCase::sonic;
  double traced = 0.0;  // characteristic foot point v (cases 1 and 2)
};

struct InterfaceFluxes {
  Scheme scheme = Scheme::godunov;
  ArrayXd g;                          // n_cells + 1
  std::vector<MusclInterface> muscl;  // per interface; muscl scheme only
};

// All interface fluxes for one snapshot. lambda is taken from the grid.
InterfaceFluxes interface_fluxes(const StateSnapshot& s, const FluxModel& f,
                                 Scheme scheme, double q_viscosity = 1.0);

// Incremental (C-form) coefficients per interface; the numerical viscosity is
// their sum. The 0/0 convention: equal neighbor values give 0 coefficients.
struct IncrementalForm {
  ArrayXd c_plus;   // n_cells + 1
  ArrayXd c_minus;  // n_cells + 1
  ArrayXd q;        // c_plus + c_minus
};

IncrementalForm incremental_coefficients(const StateSnapshot& s,
                                         const InterfaceFluxes& fluxes,
                                         const FluxModel& f);

}  // namespace fv
