#pragma once

#include <functional>
#include <string>

#include "fv1d/flux_model.hpp"

namespace fv {

// Convex entropy U with its derivative; the flux F is paired by
// derive_entropy_flux so that F' = U' f'.
struct ConvexEntropy {
  std::string name;
  std::function<double(double)> U;
  std::function<double(double)> dU;
};

// U(u) = u^2/2 (the only built-in; custom entropies go through the API).
ConvexEntropy square_entropy();

struct EntropyPair {
  ConvexEntropy entropy;
  std::function<double(double)> F;  // normalized so F(omega) = 0
};

// Builds F(u) = integral_omega^u U'(s) f'(s) ds. Closed form for
// constant-curvature fluxes with the square entropy; adaptive quadrature
// (abs tol 1e-12 * max(1,|u|)) otherwise. The normalization point is the
// sonic point, or the working-range midpoint when the model declares none.
EntropyPair derive_entropy_flux(const FluxModel& f, const ConvexEntropy& U);

}  // namespace fv
