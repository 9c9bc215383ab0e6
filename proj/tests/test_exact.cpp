#include <cmath>

#include "doctest.h"
#include "fv1d/errors.hpp"
#include "fv1d/exact.hpp"

using namespace fv;

TEST_CASE("riemann structure: shock speed and fan edges") {
  const FluxModel b = burgers_flux();
  const RiemannSolution shock = solve_riemann(1.0, -1.0, b);
  CHECK(shock.is_shock);
  CHECK(shock.sigma == doctest::Approx(0.0));

  const RiemannSolution s2 = solve_riemann(1.0, 0.0, b);
  CHECK(s2.is_shock);
  CHECK(s2.sigma == doctest::Approx(0.5).epsilon(1e-15));

  const RiemannSolution fan = solve_riemann(0.0, 1.0, b);
  CHECK_FALSE(fan.is_shock);
  CHECK(fan.xi_left == doctest::Approx(0.0));
  CHECK(fan.xi_right == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("riemann sampling: rarefaction fan inverts the speed") {
  const FluxModel b = burgers_flux();
  CHECK(riemann_sample(0.0, 1.0, -0.1, b) == doctest::Approx(0.0));
  CHECK(riemann_sample(0.0, 1.0, 0.5, b) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(riemann_sample(0.0, 1.0, 1.2, b) ==
        doctest::Approx(1.0).epsilon(1e-15));
  // Fan values increase with xi.
  double prev = -1.0;
  for (double xi = -0.2; xi <= 1.2; xi += 0.05) {
    const double u = riemann_sample(0.0, 1.0, xi, b);
    CHECK(u >= prev - 1e-15);
    prev = u;
  }
  // Shifted model: f'(u) = u - 1, so the fan center carries u = 1.
  const FluxModel sb = shifted_burgers_flux();
  CHECK(riemann_sample(0.0, 2.0, 0.0, sb) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("riemann sampling is right-continuous at shocks") {
  const FluxModel b = burgers_flux();
  CHECK(riemann_sample(1.0, -1.0, 0.0, b) == doctest::Approx(-1.0));
  CHECK(riemann_sample(1.0, 0.0, 0.5, b) == doctest::Approx(0.0));
  CHECK(riemann_sample(1.0, 0.0, 0.49, b) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(riemann_sample(1.0, 0.0, 0.51, b) == doctest::Approx(0.0));
}

TEST_CASE("exact fan averages: cell means of u = x/t") {
  const FluxModel b = burgers_flux();
  const GridSpec g = make_grid(5, 0.1, 0.0, 1.0);
  const ArrayXd u = exact_riemann_cell_averages(0.0, 1.0, b, g, 1.0, 0.0);
  for (int j = 0; j < 5; ++j) {
    CHECK(u[j] == doctest::Approx(0.05 + 0.1 * j).epsilon(1e-13));
  }
}

TEST_CASE("exact shock averages: overlap split of the jump cell") {
  const FluxModel b = burgers_flux();
  const GridSpec g = make_grid(5, 0.1, 0.0, 1.0);
  // Shock speed 1/2; at T = 0.2 the shock sits on the edge x = 0.1.
  const ArrayXd on_edge = exact_riemann_cell_averages(1.0, 0.0, b, g, 0.2, 0.0);
  CHECK(on_edge[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (int j = 1; j < 5; ++j) CHECK(on_edge[j] == doctest::Approx(0.0));
  // At T = 0.25 the shock sits at x = 0.125, a quarter into cell 1.
  const ArrayXd split = exact_riemann_cell_averages(1.0, 0.0, b, g, 0.25, 0.0);
  CHECK(split[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(split[1] == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(split[2] == doctest::Approx(0.0));
}

TEST_CASE("exact averages match the quadrature projection of the sampler") {
  const FluxModel b = burgers_flux();
  const GridSpec g = make_grid(20, 0.1, -1.0, 1.0);
  const double T = 0.7, x0 = 0.03;
  const ArrayXd closed =
      exact_riemann_cell_averages(-0.5, 0.5, b, g, T, x0);
  const ArrayXd oracle = project_initial(
      [&](double x) { return riemann_sample(-0.5, 0.5, (x - x0) / T, b); },
      g);
  for (int j = 0; j < g.n_cells; ++j) {
    CHECK(closed[j] == doctest::Approx(oracle[j]).epsilon(1e-11));
  }
}

TEST_CASE("exact averages under the shifted flux keep the fan centered") {
  const FluxModel sb = shifted_burgers_flux();
  const GridSpec g = make_grid(20, 0.1, -1.0, 1.0);
  const ArrayXd closed = exact_riemann_cell_averages(0.0, 2.0, sb, g, 0.6, 0.0);
  const ArrayXd oracle = project_initial(
      [&](double x) { return riemann_sample(0.0, 2.0, x / 0.6, sb); }, g);
  for (int j = 0; j < g.n_cells; ++j) {
    CHECK(closed[j] == doctest::Approx(oracle[j]).epsilon(1e-11));
  }
}

TEST_CASE("fine-grid oracle approaches the exact fan as refinement grows") {
  const FluxModel b = burgers_flux();
  const GridSpec coarse = make_grid(50, 0.08, -2.0, 1.0);
  InitialData d;
  d.kind = InitialData::Kind::riemann;
  d.left = -0.5;
  d.right = 0.5;
  d.x0 = 0.0;
  const double T = 0.5;
  const ArrayXd exact = exact_riemann_cell_averages(-0.5, 0.5, b, coarse, T);
  StateSnapshot probe;
  probe.grid = coarse;

  probe.values = fine_grid_oracle(d, b, coarse, T, 8);
  const double e8 = l1_error(probe, exact);
  probe.values = fine_grid_oracle(d, b, coarse, T, 16);
  const double e16 = l1_error(probe, exact);
  CHECK(e8 < 0.02);
  CHECK(e16 < e8);
}

TEST_CASE("fine-grid oracle conserves the projected mass") {
  const FluxModel b = burgers_flux();
  const GridSpec coarse = make_grid(40, 0.1, -2.0, 1.0);
  InitialData d;
  d.kind = InitialData::Kind::gaussian;
  d.baseline = 0.3;
  d.bumps = {{0.5, -0.4, 0.15}};
  StateSnapshot s;
  s.grid = coarse;
  s.values = fine_grid_oracle(d, b, coarse, 0.4, 8);
  // Conservative averaging preserves the fine-grid mass, which matches the
  // projected initial mass exactly (compact support, conservative scheme).
  const StateSnapshot s0 = make_initial(d, coarse);
  CHECK(mass(s) == doctest::Approx(mass(s0)).epsilon(1e-12));
}

TEST_CASE("fine-grid oracle rejects grid-bound presets and low refinement") {
  const FluxModel b = burgers_flux();
  const GridSpec g = make_grid(20, 0.1, -1.0, 1.0);
  InitialData spike;
  spike.kind = InitialData::Kind::spike;
  CHECK_THROWS_AS(fine_grid_oracle(spike, b, g, 0.1, 16), ConfigError);
  InitialData rnd;
  rnd.kind = InitialData::Kind::random_bv;
  CHECK_THROWS_AS(fine_grid_oracle(rnd, b, g, 0.1, 16), ConfigError);
  InitialData ok;
  ok.kind = InitialData::Kind::constant;
  CHECK_THROWS_AS(fine_grid_oracle(ok, b, g, 0.1, 7), ConfigError);
}

TEST_CASE("l1 error demands matching grids") {
  StateSnapshot a;
  a.grid = make_grid(10, 0.1, 0.0, 1.0);
  a.values = ArrayXd::Zero(10);
  CHECK_THROWS_AS(l1_error(a, ArrayXd::Zero(8)), ConfigError);

  StateSnapshot c;
  c.grid = make_grid(10, 0.2, 0.0, 1.0);
  c.values = ArrayXd::Zero(10);
  CHECK_THROWS_AS(l1_error(a, c), ConfigError);

  StateSnapshot d;
  d.grid = a.grid;
  d.values = ArrayXd::Constant(10, 0.3);
  CHECK(l1_error(a, d) == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("observed rates from a halving error sequence") {
  const std::vector<std::pair<double, double>> seq = {
      {0.2, 0.4}, {0.1, 0.2}, {0.05, 0.1}};
  const auto rates = convergence_rates(seq);
  REQUIRE(rates.size() == 2);
  CHECK(rates[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(rates[1] == doctest::Approx(1.0).epsilon(1e-13));

  CHECK_THROWS_AS(
      convergence_rates({{0.2, 0.4}, {0.11, 0.2}}), ConfigError);

  const auto inf_rate = convergence_rates({{0.2, 0.1}, {0.1, 0.0}});
  REQUIRE(inf_rate.size() == 1);
  CHECK(std::isinf(inf_rate[0]));
}
