#pragma once

#include <optional>
#include <vector>

#include "fv1d/fluxes.hpp"
#include "fv1d/initial_data.hpp"

namespace fv {

// How to choose the mesh ratio. Exactly one of lambda / cfl_target may be
// set; with neither, cfl_target defaults to 1/4 (the CFL bound the theory
// assumes). With cfl_target the time step is snapped so the run lands on the
// final time exactly; with an explicit lambda the last step may overshoot.
struct SchemeConfig {
  Scheme scheme = Scheme::godunov;
  double q_viscosity = 1.0;  // lax_friedrichs only
  std::optional<double> lambda;
  std::optional<double> cfl_target;
};

struct RunHistory {
  std::vector<StateSnapshot> snapshots;  // steps 0..n_steps
  FluxModel flux;
  Scheme scheme = Scheme::godunov;
  double q_viscosity = 1.0;
  double lambda = 0.0;
  double tau = 0.0;
  int n_steps = 0;

  const StateSnapshot& initial() const { return snapshots.front(); }
  const StateSnapshot& final() const { return snapshots.back(); }
};

// One conservative update u - lambda (g_{i+1} - g_i) with lambda from the
// snapshot's grid. Enforces the CFL bound lambda * sup|f'| <= 1/4 (RunError)
// and rejects non-finite results. Does not police the boundary margins;
// run() does.
StateSnapshot step(const StateSnapshot& s, const FluxModel& f, Scheme scheme,
                   double q_viscosity = 1.0);

// Advance s0 to time T (ceil(T / tau) steps; see SchemeConfig). Requires the
// two-cell margins of s0 to be constant up to 1e-12 * max(1, |u|_inf), which
// this flattens exactly; aborts with RunError the moment a step changes any
// of the four margin cells (a wave reached the boundary).
RunHistory run(const StateSnapshot& s0, const FluxModel& f,
               const SchemeConfig& cfg, double T);

// Same advance as run() but keeps only the final state (O(1) memory).
// Meant for reference solutions on very fine grids, where retaining every
// intermediate snapshot would dominate the cost of computing them.
StateSnapshot run_final(const StateSnapshot& s0, const FluxModel& f,
                        const SchemeConfig& cfg, double T);

}  // namespace fv
