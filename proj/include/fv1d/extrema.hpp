#pragma once

#include <vector>

#include <Eigen/Dense>

namespace fv {

using Eigen::ArrayXd;

// A local extremum, plateau-aware: the maximal run of equal values
// values[first_cell..last_cell] whose two flanking cells both lie strictly
// below (maximum) or strictly above (minimum). Runs touching the array ends
// are never extrema (the margins are boundary, not interior structure).
struct ExtremumRecord {
  int first_cell = 0;
  int last_cell = 0;
  bool is_max = true;
  double value = 0.0;

  // The leftmost plateau cell stands in for the whole plateau wherever a
  // single cell index is needed (paths, jump measurements).
  int representative() const { return first_cell; }
  int width() const { return last_cell - first_cell + 1; }
};

// All local extrema of the values, left to right. Maxima and minima strictly
// alternate by construction.
std::vector<ExtremumRecord> detect_extrema(const ArrayXd& values);

// A maximal monotone stretch of cells. Segments are cut at extremum plateaus:
// a segment ends on the first cell of the next plateau and the following one
// begins on its last cell, so plateau interiors (width > 2) belong to no
// segment. A constant array is one nondecreasing segment.
struct MonotoneSegment {
  int first_cell = 0;
  int last_cell = 0;
  bool nondecreasing = true;
};

struct MonotoneSegments {
  std::vector<MonotoneSegment> segments;
};

MonotoneSegments classify_monotone_segments(const ArrayXd& values);

}  // namespace fv
