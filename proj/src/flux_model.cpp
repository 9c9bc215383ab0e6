#include "fv1d/flux_model.hpp"

#include <cmath>

#include "fv1d/errors.hpp"

namespace fv {

FluxModel burgers_flux() {
  FluxModel m;
  m.name = "burgers";
  m.f = [](double u) { return 0.5 * u * u; };
  m.df = [](double u) { return u; };
  m.ddf = [](double) { return 1.0; };
  m.sonic = 0.0;
  m.convexity_floor = 1.0;
  m.working_range = {-2.0, 2.0};
  m.constant_curvature = 1.0;
  return m;
}

FluxModel shifted_burgers_flux() {
  FluxModel m;
  m.name = "shifted_burgers";
  m.f = [](double u) { return 0.5 * (u - 1.0) * (u - 1.0); };
  m.df = [](double u) { return u - 1.0; };
  m.ddf = [](double) { return 1.0; };
  m.sonic = 1.0;
  m.convexity_floor = 1.0;
  m.working_range = {-1.0, 3.0};
  m.constant_curvature = 1.0;
  return m;
}

FluxModel quartic_flux() {
  FluxModel m;
  m.name = "quartic";
  m.f = [](double u) { return 0.25 * u * u * u * u; };
  m.df = [](double u) { return u * u * u; };
  m.ddf = [](double u) { return 3.0 * u * u; };
  m.sonic = 0.0;
  // f'' touches zero at the sonic point, so the uniform floor on [-2,2] is 0.
  m.convexity_floor = 0.0;
  m.working_range = {-2.0, 2.0};
  return m;
}

FluxModel zero_flux() {
  FluxModel m;
  m.name = "zero";
  m.f = [](double) { return 0.0; };
  m.df = [](double) { return 0.0; };
  m.ddf = [](double) { return 0.0; };
  m.sonic = 0.0;
  m.convexity_floor = 0.0;
  m.working_range = {-2.0, 2.0};
  m.strictly_convex = false;
  m.constant_curvature = std::nullopt;
  return m;
}

FluxModel flux_by_name(const std::string& name) {
  if (name == "burgers") return burgers_flux();
  if (name == "shifted_burgers") return shifted_burgers_flux();
  if (name == "quartic") return quartic_flux();
  if (name == "zero") return zero_flux();
  throw ConfigError("unknown flux model: " + name);
}

void validate(const FluxModel& m) {
  if (!m.f || !m.df || !m.ddf) {
    throw ConfigError("flux model '" + m.name + "': missing callables");
  }
  const auto [lo, hi] = m.working_range;
  if (!(lo < hi)) {
    throw ConfigError("flux model '" + m.name + "': empty working range");
  }
  if (!m.strictly_convex) return;

  constexpr int kSamples = 1024;
  double prev_speed = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double u = lo + (hi - lo) * i / (kSamples - 1);
    const double fu = m.f(u), du = m.df(u), cu = m.ddf(u);
    if (!std::isfinite(fu) || !std::isfinite(du) || !std::isfinite(cu)) {
      throw ConfigError("flux model '" + m.name + "': non-finite sample");
    }
    if (i > 0 && !(du > prev_speed)) {
      throw ConfigError("flux model '" + m.name +
                        "': f' is not strictly increasing");
    }
    prev_speed = du;
    if (cu < m.convexity_floor - 1e-9 * std::max(1.0, m.convexity_floor)) {
      throw ConfigError("flux model '" + m.name +
                        "': f'' drops below the declared convexity floor");
    }
  }
  if (m.sonic && std::abs(m.df(*m.sonic)) > 1e-12) {
    throw ConfigError("flux model '" + m.name +
                      "': f' does not vanish at the declared sonic point");
  }
}

}  // namespace fv
