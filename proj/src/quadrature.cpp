#include "fv1d/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace fv {
namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (symmetric half listed).
constexpr double kKronrodNodes[8] = {
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};
constexpr double kKronrodWeights[8] = {
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};
// Gauss-7 weights aligned with the even-indexed Kronrod nodes.
constexpr double kGaussWeights[4] = {
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult gk15(const std::function<double(double)>& fn, double a, double b) {
  const double c = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = fn(c);
  double fm[8], fp[8];
  double kron = kKronrodWeights[0] * f0;
  double gauss = kGaussWeights[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kKronrodNodes[i];
    fm[i] = fn(c - dx);
    fp[i] = fn(c + dx);
    kron += kKronrodWeights[i] * (fm[i] + fp[i]);
    if (i % 2 == 0) gauss += kGaussWeights[i / 2] * (fm[i] + fp[i]);
  }
  // QUADPACK sharpening: rescale |K15 - G7| against the variation measure
  // resasc = integral of |f - mean|. Without that scale the raw difference
  // can shrink much faster than the true error (e.g. on panels containing a
  // kink), silently accepting wrong panels.
  const double mean = 0.5 * kron;  // Kronrod weights sum to 2 on [-1, 1]
  double resasc = kKronrodWeights[0] * std::abs(f0 - mean);
  for (int i = 1; i < 8; ++i) {
    resasc += kKronrodWeights[i] *
              (std::abs(fm[i] - mean) + std::abs(fp[i] - mean));
  }
  kron *= half;
  gauss *= half;
  resasc *= std::abs(half);
  const double diff = std::abs(kron - gauss);
  double err = diff;
  if (resasc != 0.0 && diff != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * diff / resasc, 1.5));
  }
  return {kron, err};
}

double integrate_rec(const std::function<double(double)>& fn, double a,
                     double b, double tol, int depth) {
  const PanelResult r = gk15(fn, a, b);
  if (r.error <= tol || b - a < 1e-14 * (std::abs(a) + std::abs(b) + 1.0)) {
    return r.kronrod;
  }
  if (depth > 52) {
    throw std::runtime_error("integrate: panel subdivision did not converge");
  }
  const double c = 0.5 * (a + b);
  return integrate_rec(fn, a, c, 0.5 * tol, depth + 1) +
         integrate_rec(fn, c, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& fn, double a, double b,
                 double abs_tol) {
  if (a == b) return 0.0;
  const double sign = a < b ? 1.0 : -1.0;
  const double lo = std::min(a, b), hi = std::max(a, b);
  return sign * integrate_rec(fn, lo, hi, std::max(abs_tol, 1e-300), 0);
}

double solve_monotone(const std::function<double(double)>& fn,
                      const std::function<double(double)>& dfn, double lo,
                      double hi, double x0, double tol) {
  if (lo > hi) std::swap(lo, hi);
  double flo = fn(lo), fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::runtime_error("solve_monotone: bracket does not enclose a root");
  }
  double x = std::clamp(x0, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = fn(x);
    if (std::abs(fx) <= tol) return x;
    if ((fx > 0.0) == (fhi > 0.0)) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }
    const double d = dfn(x);
    double next = d != 0.0 ? x - fx / d : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) next = 0.5 * (lo + hi);
    x = next;
    if (hi - lo < 1e-17 * (std::abs(lo) + std::abs(hi) + 1.0)) return x;
  }
  throw std::runtime_error("solve_monotone: iteration limit reached");
}

}  // namespace fv
