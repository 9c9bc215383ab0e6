#pragma once

#include <functional>

namespace fv {

// Adaptive Gauss-Kronrod (7/15) integration to an absolute tolerance.
// Bisects until the embedded error estimate of each panel is below its share
// of the budget. Throws std::runtime_error if the recursion depth is exhausted
// before the estimate converges (wildly singular integrand).
double integrate(const std::function<double(double)>& fn, double a, double b,
                 double abs_tol);

// Root of a continuous, strictly monotone function on [lo, hi].
// Newton iteration from x0 guarded by the bracket; falls back to bisection
// whenever a Newton step leaves the bracket or the derivative degenerates.
// Requires fn(lo) and fn(hi) to enclose a sign change (either orientation);
// throws std::runtime_error otherwise. Converges to |fn(x)| <= tol.
double solve_monotone(const std::function<double(double)>& fn,
                      const std::function<double(double)>& dfn, double lo,
                      double hi, double x0, double tol);

}  // namespace fv
