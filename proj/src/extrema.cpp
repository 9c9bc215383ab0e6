#include "fv1d/extrema.hpp"

namespace fv {

std::vector<ExtremumRecord> detect_extrema(const ArrayXd& values) {
  std::vector<ExtremumRecord> out;
  const int n = static_cast<int>(values.size());
  int a = 0;
  while (a < n) {
    int b = a;
    while (b + 1 < n && values[b + 1] == values[a]) ++b;
    if (a > 0 && b < n - 1) {
      const double v = values[a];
      const bool below = values[a - 1] < v && values[b + 1] < v;
      const bool above = values[a - 1] > v && values[b + 1] > v;
      if (below || above) out.push_back({a, b, below, v});
    }
    a = b + 1;
  }
  return out;
}

MonotoneSegments classify_monotone_segments(const ArrayXd& values) {
  MonotoneSegments out;
  const int n = static_cast<int>(values.size());
  if (n == 0) return out;
  const auto extrema = detect_extrema(values);
  int start = 0;
  for (const auto& e : extrema) {
    out.segments.push_back(
        {start, e.first_cell, values[e.first_cell] >= values[start]});
    start = e.last_cell;
  }
  if (start < n - 1 || out.segments.empty()) {
    out.segments.push_back({start, n - 1, values[n - 1] >= values[start]});
  }
  return out;
}

}  // namespace fv
