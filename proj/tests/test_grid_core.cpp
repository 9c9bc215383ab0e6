#include "doctest.h"
#include "fv1d/errors.hpp"
#include "fv1d/grid.hpp"

using namespace fv;

TEST_CASE("make_grid computes edges, centers and the time step") {
  const GridSpec g = make_grid(10, 0.25, -1.0, 0.5);
  CHECK(g.n_cells == 10);
  CHECK(g.h == 0.25);
  CHECK(g.x_min == -1.0);
  CHECK(g.lambda == 0.5);
  CHECK(g.tau() == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(g.x_edge(0) == -1.0);
  CHECK(g.x_edge(10) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(g.x_max() == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(g.x_center(0) == doctest::Approx(-0.875).epsilon(1e-15));
  CHECK(g.x_center(9) == doctest::Approx(1.375).epsilon(1e-15));
}

TEST_CASE("make_grid validates its arguments") {
  CHECK_THROWS_AS(make_grid(4, 0.1, 0.0, 0.5), ConfigError);   // too few cells
  CHECK_THROWS_AS(make_grid(10, 0.0, 0.0, 0.5), ConfigError);  // h = 0
  CHECK_THROWS_AS(make_grid(10, -0.1, 0.0, 0.5), ConfigError);
  CHECK_THROWS_AS(make_grid(10, 0.1, 0.0, 0.0), ConfigError);  // lambda = 0
  CHECK_THROWS_AS(make_grid(10, 0.1, 0.0, -1.0), ConfigError);
}

TEST_CASE("snapshot time is step times tau") {
  StateSnapshot s;
  s.grid = make_grid(5, 0.2, 0.0, 0.5);
  s.values = ArrayXd::Zero(5);
  s.step = 7;
  CHECK(s.time() == doctest::Approx(7 * 0.1).epsilon(1e-15));
}

TEST_CASE("total variation sums absolute neighbor jumps") {
  ArrayXd u(7);
  u << 0, 1, 1, 0, -1, -1, 0;
  CHECK(total_variation(u) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(total_variation(ArrayXd::Constant(5, 3.0)) == 0.0);
  ArrayXd w(5);
  w << 0, 2, -1, 3, 3;
  CHECK(total_variation(w) == doctest::Approx(2 + 3 + 4 + 0).epsilon(1e-15));
}

TEST_CASE("sup_speed takes the hull endpoint with the larger |f'|") {
  const FluxModel b = burgers_flux();
  ArrayXd u(5);
  u << -3, 0, 1, 2, 0.5;
  CHECK(sup_speed(b, u) == doctest::Approx(3.0).epsilon(1e-15));
  ArrayXd v(5);
  v << 0.1, 0.2, 2.5, 0.3, 0.1;
  CHECK(sup_speed(b, v) == doctest::Approx(2.5).epsilon(1e-15));

  const FluxModel q = quartic_flux();
  ArrayXd w(5);
  w << -1, 0, 2, 0, -1;  // f' = u^3: max(|-1|, |8|) = 8
  CHECK(sup_speed(q, w) == doctest::Approx(8.0).epsilon(1e-15));

  CHECK(sup_speed(zero_flux(), u) == 0.0);
}

TEST_CASE("mass is h times the sum of cell values") {
  StateSnapshot s;
  s.grid = make_grid(5, 0.5, 0.0, 1.0);
  s.values = ArrayXd(5);
  s.values << 1, 2, 3, 4, 5;
  CHECK(mass(s) == doctest::Approx(7.5).epsilon(1e-15));
}

TEST_CASE("margins_constant looks at the two outermost cells per side") {
  StateSnapshot s;
  s.grid = make_grid(6, 0.5, 0.0, 1.0);
  s.values = ArrayXd(6);
  s.values << 1, 1, 5, -2, 0, 0;
  CHECK(margins_constant(s));
  s.values[1] = 1.0 + 1e-9;
  CHECK_FALSE(margins_constant(s));
  s.values[1] = 1.0;
  s.values[4] = 0.5;
  CHECK_FALSE(margins_constant(s));
}
