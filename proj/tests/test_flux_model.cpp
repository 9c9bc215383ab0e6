#include <cmath>

#include "doctest.h"
#include "fv1d/errors.hpp"
#include "fv1d/flux_model.hpp"

using namespace fv;

TEST_CASE("burgers model: values, derivatives, metadata") {
  const FluxModel m = burgers_flux();
  CHECK(m.name == "burgers");
  CHECK(m.f(2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(m.f(-3.0) == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(m.df(3.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(m.ddf(0.7) == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(m.sonic.has_value());
  CHECK(*m.sonic == 0.0);
  CHECK(m.convexity_floor == doctest::Approx(1.0));
  CHECK(m.strictly_convex);
  REQUIRE(m.constant_curvature.has_value());
  CHECK(*m.constant_curvature == doctest::Approx(1.0));
  CHECK(m(1.5) == m.f(1.5));
  CHECK(m.speed(1.5) == m.df(1.5));
  CHECK(m.curvature(1.5) == m.ddf(1.5));
  CHECK_NOTHROW(validate(m));
}

TEST_CASE("shifted burgers model: minimum moved to u = 1") {
  const FluxModel m = shifted_burgers_flux();
  CHECK(m.f(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(m.f(1.0) == doctest::Approx(0.0));
  CHECK(m.df(1.0) == doctest::Approx(0.0));
  CHECK(m.df(3.0) == doctest::Approx(2.0).epsilon(1e-15));
  REQUIRE(m.sonic.has_value());
  CHECK(*m.sonic == doctest::Approx(1.0));
  CHECK(m.convexity_floor == doctest::Approx(1.0));
  CHECK_NOTHROW(validate(m));
}

TEST_CASE("quartic model: degenerate convexity at the origin") {
  const FluxModel m = quartic_flux();
  CHECK(m.f(2.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(m.df(2.0) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(m.ddf(2.0) == doctest::Approx(12.0).epsilon(1e-15));
  REQUIRE(m.sonic.has_value());
  CHECK(*m.sonic == 0.0);
  // f'' vanishes at 0, so no positive lower bound on the working range.
  CHECK(m.convexity_floor == 0.0);
  CHECK(m.strictly_convex);
  CHECK_FALSE(m.constant_curvature.has_value());
  CHECK_NOTHROW(validate(m));
}

TEST_CASE("zero model: flat flux, not strictly convex") {
  const FluxModel m = zero_flux();
  CHECK(m.f(0.7) == 0.0);
  CHECK(m.df(-2.0) == 0.0);
  CHECK_FALSE(m.strictly_convex);
  CHECK(m.convexity_floor == 0.0);
  // Validation is skipped entirely for non-strictly-convex models.
  CHECK_NOTHROW(validate(m));
}

TEST_CASE("flux_by_name resolves the built-ins and rejects unknowns") {
  CHECK(flux_by_name("burgers").name == "burgers");
  CHECK(flux_by_name("shifted_burgers").name == "shifted_burgers");
  CHECK(flux_by_name("quartic").name == "quartic");
  CHECK(flux_by_name("zero").name == "zero");
  CHECK_THROWS_AS(flux_by_name("cubic"), ConfigError);
  CHECK_THROWS_AS(flux_by_name(""), ConfigError);
}

TEST_CASE("validate rejects a non-convex flux that claims convexity") {
  FluxModel bad = burgers_flux();
  bad.name = "bogus";
  bad.f = [](double u) { return std::cos(u); };
  bad.df = [](double u) { return -std::sin(u); };
  bad.ddf = [](double u) { return -std::cos(u); };
  bad.sonic = 0.0;
  bad.working_range = {-1.0, 1.0};
  CHECK_THROWS_AS(validate(bad), ConfigError);
}

TEST_CASE("validate rejects a wrong sonic point") {
  FluxModel bad = burgers_flux();
  bad.sonic = 0.5;  // f'(0.5) = 0.5, far from zero
  CHECK_THROWS_AS(validate(bad), ConfigError);
}

TEST_CASE("validate rejects an overstated convexity floor") {
  FluxModel bad = burgers_flux();
  bad.convexity_floor = 2.0;  // f'' is identically 1
  CHECK_THROWS_AS(validate(bad), ConfigError);
}

TEST_CASE("validate rejects non-finite samples") {
  FluxModel bad = burgers_flux();
  bad.f = [](double u) { return u == 0.0 ? 0.0 : u * u / 2.0 / (u - u); };
  CHECK_THROWS_AS(validate(bad), ConfigError);
}
