#include "fv1d/entropy.hpp"

#include <cmath>

#include "fv1d/quadrature.hpp"

namespace fv {

ConvexEntropy square_entropy() {
  ConvexEntropy e;
  e.name = "square";
  e.U = [](double u) { return 0.5 * u * u; };
  e.dU = [](double u) { return u; };
  return e;
}

EntropyPair derive_entropy_flux(const FluxModel& f, const ConvexEntropy& U) {
  const double base =
      f.sonic ? *f.sonic
              : 0.5 * (f.working_range.first + f.working_range.second);
  EntropyPair pair{U, {}};
  if (f.constant_curvature && U.name == "square") {
    // F(u) = a * (u^3/3 - omega u^2/2 + omega^3/6) for f'' = a, U = u^2/2.
    const double a = *f.constant_curvature;
    const double w = base;
    pair.F = [a, w](double u) {
      return a * (u * u * u / 3.0 - w * u * u / 2.0 + w * w * w / 6.0);
    };
    return pair;
  }
  const auto df = f.df;
  const auto dU = U.dU;
  pair.F = [df, dU, base](double u) {
    const double tol = 1e-12 * std::max(1.0, std::abs(u - base));
    return integrate([&](double s) { return dU(s) * df(s); }, base, u, tol);
  };
  return pair;
}

}  // namespace fv
