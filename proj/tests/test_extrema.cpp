#include "doctest.h"
#include "fv1d/extrema.hpp"

using namespace fv;

namespace {

ArrayXd arr(std::initializer_list<double> vals) {
  ArrayXd u(static_cast<int>(vals.size()));
  int j = 0;
  for (double v : vals) u[j++] = v;
  return u;
}

}  // namespace

TEST_CASE("plateau extrema with strictly lower/higher flanks") {
  const ArrayXd u = arr({0, 1, 1, 0, -1, -1, 0});
  const auto ex = detect_extrema(u);
  REQUIRE(ex.size() == 2);
  CHECK(ex[0].is_max);
  CHECK(ex[0].first_cell == 1);
  CHECK(ex[0].last_cell == 2);
  CHECK(ex[0].value == 1.0);
  CHECK(ex[0].representative() == 1);
  CHECK(ex[0].width() == 2);
  CHECK_FALSE(ex[1].is_max);
  CHECK(ex[1].first_cell == 4);
  CHECK(ex[1].last_cell == 5);
  CHECK(ex[1].value == -1.0);
}

TEST_CASE("runs touching the array ends are never extrema") {
  CHECK(detect_extrema(arr({1, 0, 0, 0, 0})).empty());
  CHECK(detect_extrema(arr({0, 0, 0, 0, 1})).empty());
  // The boundary plateaus are excluded, but the interior dip between them
  // has strict flanks on both sides and counts.
  const auto dip = detect_extrema(arr({2, 2, 1, 1, 3, 3}));
  REQUIRE(dip.size() == 1);
  CHECK_FALSE(dip[0].is_max);
  CHECK(dip[0].first_cell == 2);
  CHECK(dip[0].last_cell == 3);
  const auto ex = detect_extrema(arr({2, 2, 1, 1, 3, 3, 1}));
  REQUIRE(ex.size() == 2);
  CHECK_FALSE(ex[0].is_max);
  CHECK(ex[0].first_cell == 2);
  CHECK(ex[0].last_cell == 3);
  CHECK(ex[1].is_max);
}

TEST_CASE("constant and monotone arrays have no extrema") {
  CHECK(detect_extrema(ArrayXd::Constant(6, 2.0)).empty());
  CHECK(detect_extrema(arr({0, 1, 2, 3, 4})).empty());
  CHECK(detect_extrema(arr({4, 3, 2, 1, 0})).empty());
}

TEST_CASE("maxima and minima strictly alternate") {
  const ArrayXd u = arr({0, 2, 1, 3, 0, 4, 2, 5, 1, 1});
  const auto ex = detect_extrema(u);
  REQUIRE(ex.size() == 7);
  for (std::size_t k = 0; k < ex.size(); ++k) {
    CHECK(ex[k].is_max == (k % 2 == 0));
  }
  for (std::size_t k = 0; k + 1 < ex.size(); ++k) {
    CHECK(ex[k].last_cell < ex[k + 1].first_cell);
  }
}

TEST_CASE("single interior spike") {
  const auto ex = detect_extrema(arr({0, 0, 1, 0, 0}));
  REQUIRE(ex.size() == 1);
  CHECK(ex[0].is_max);
  CHECK(ex[0].first_cell == 2);
  CHECK(ex[0].last_cell == 2);
  CHECK(ex[0].width() == 1);
}

TEST_CASE("segments cut at extremum plateaus share the plateau edge cells") {
  const MonotoneSegments ms =
      classify_monotone_segments(arr({0, 1, 1, 0, -1, -1, 0}));
  REQUIRE(ms.segments.size() == 3);
  CHECK(ms.segments[0].first_cell == 0);
  CHECK(ms.segments[0].last_cell == 1);  // ends on the max plateau's first cell
  CHECK(ms.segments[0].nondecreasing);
  CHECK(ms.segments[1].first_cell == 2);  // begins on the max plateau's last
  CHECK(ms.segments[1].last_cell == 4);
  CHECK_FALSE(ms.segments[1].nondecreasing);
  CHECK(ms.segments[2].first_cell == 5);
  CHECK(ms.segments[2].last_cell == 6);
  CHECK(ms.segments[2].nondecreasing);
}

TEST_CASE("wide plateau interiors belong to no segment") {
  // Max plateau cells 2..4: segment 1 ends at cell 2, segment 2 starts at 4.
  const MonotoneSegments ms =
      classify_monotone_segments(arr({0, 1, 2, 2, 2, 1, 0, 0}));
  REQUIRE(ms.segments.size() == 2);
  CHECK(ms.segments[0].first_cell == 0);
  CHECK(ms.segments[0].last_cell == 2);
  CHECK(ms.segments[0].nondecreasing);
  CHECK(ms.segments[1].first_cell == 4);
  CHECK(ms.segments[1].last_cell == 7);
  CHECK_FALSE(ms.segments[1].nondecreasing);
}

TEST_CASE("a constant array is one nondecreasing segment") {
  const MonotoneSegments ms =
      classify_monotone_segments(ArrayXd::Constant(5, 1.5));
  REQUIRE(ms.segments.size() == 1);
  CHECK(ms.segments[0].first_cell == 0);
  CHECK(ms.segments[0].last_cell == 4);
  CHECK(ms.segments[0].nondecreasing);
}

TEST_CASE("strictly monotone arrays are one segment") {
  const MonotoneSegments up = classify_monotone_segments(arr({0, 1, 2, 3, 4}));
  REQUIRE(up.segments.size() == 1);
  CHECK(up.segments[0].nondecreasing);
  const MonotoneSegments dn = classify_monotone_segments(arr({4, 3, 1, 0, 0}));
  REQUIRE(dn.segments.size() == 1);
  CHECK_FALSE(dn.segments[0].nondecreasing);
}

TEST_CASE("segments cover every cell outside wide plateau interiors") {
  const ArrayXd u = arr({0, 2, 1, 3, 0, 4, 2, 5, 1, 1});
  const MonotoneSegments ms = classify_monotone_segments(u);
  // Values alternate every cell: 8 segments, each two cells, overlapping ends.
  REQUIRE(ms.segments.size() == 8);
  for (std::size_t k = 0; k + 1 < ms.segments.size(); ++k) {
    CHECK(ms.segments[k].last_cell == ms.segments[k + 1].first_cell);
    CHECK(ms.segments[k].nondecreasing != ms.segments[k + 1].nondecreasing);
  }
}
