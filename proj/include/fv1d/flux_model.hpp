#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace fv {

// A convex scalar flux f together with the analytic data the schemes and
// diagnostics need: derivatives, the sonic point (where f' vanishes), a lower
// bound on f'' over the working range, and the working range itself (the
// interval states are expected to live in; validation samples it).
struct FluxModel {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> ddf;
  std::optional<double> sonic;      // omega with f'(omega) = 0, if any
  double convexity_floor = 0.0;     // inf f'' over the working range
  std::pair<double, double> working_range{-1.0, 1.0};
  bool strictly_convex = true;
  // Set when f'' is a positive constant a; enables closed-form solves
  // (interface foot point, rarefaction fan inversion).
  std::optional<double> constant_curvature;

  double operator()(double u) const { return f(u); }
  double speed(double u) const { return df(u); }
  double curvature(double u) const { return ddf(u); }
};

// Built-in models.
FluxModel burgers_flux();          // u^2/2, sonic 0, floor 1
FluxModel shifted_burgers_flux();  // (u-1)^2/2, sonic 1, floor 1
FluxModel quartic_flux();          // u^4/4, sonic 0, floor 0 on [-2,2]
FluxModel zero_flux();             // f = 0; not strictly convex

// Lookup by config name ("burgers", "shifted_burgers", "quartic", "zero").
// Throws ConfigError for unknown names.
FluxModel flux_by_name(const std::string& name);

// Samples the working range (1024 points) and checks that f' is strictly
// increasing, f'' stays above convexity_floor (within 1e-9 slack), the sonic
// point satisfies |f'(omega)| <= 1e-12, and all samples are finite. Skipped
// for models declaring strictly_convex = false. Throws ConfigError.
void validate(const FluxModel& m);

}  // namespace fv
