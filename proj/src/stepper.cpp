#include "fv1d/stepper.hpp"

#include <cmath>

#include "fv1d/errors.hpp"

namespace fv {

StateSnapshot step(const StateSnapshot& s, const FluxModel& f, Scheme scheme,
                   double q_viscosity) {
  const int n = static_cast<int>(s.values.size());
  const double lambda = s.grid.lambda;
  if (lambda * sup_speed(f, s.values) > 0.25 * (1.0 + 1e-12)) {
    throw RunError("CFL violation: lambda * sup|f'| exceeds 1/4");
  }
  const InterfaceFluxes fl = interface_fluxes(s, f, scheme, q_viscosity);
  StateSnapshot next;
  next.step = s.step + 1;
  next.grid = s.grid;
  next.values =
      s.values - lambda * (fl.g.tail(n) - fl.g.head(n));
  if (!next.values.allFinite()) {
    throw RunError("time step produced non-finite values");
  }
  return next;
}

namespace {

struct ResolvedRun {
  StateSnapshot init;  // step 0, margins flattened, grid.lambda resolved
  int n_steps = 0;
};

ResolvedRun prepare_run(const StateSnapshot& s0, const FluxModel& f,
                        const SchemeConfig& cfg, double T) {
  if (cfg.lambda && cfg.cfl_target) {
    throw ConfigError("lambda and cfl_target are mutually exclusive");
  }
  if (!(T >= 0.0) || !std::isfinite(T)) {
    throw ConfigError("final time T must be finite and >= 0");
  }
  if (cfg.scheme == Scheme::lax_friedrichs && !(cfg.q_viscosity > 0.0)) {
    throw ConfigError("lax_friedrichs viscosity Q must be positive");
  }

  StateSnapshot init = s0;
  init.step = 0;
  {
    const int n = static_cast<int>(init.values.size());
    if (n < 5) throw ConfigError("state needs at least 5 cells");
    const double scale = std::max(1.0, init.values.abs().maxCoeff());
    if (std::abs(init.values[1] - init.values[0]) > 1e-12 * scale ||
        std::abs(init.values[n - 1] - init.values[n - 2]) > 1e-12 * scale) {
      throw ConfigError(
          "initial data is not constant on the two-cell boundary margins");
    }
    init.values[0] = init.values[1];
    init.values[n - 1] = init.values[n - 2];
  }

  // Resolve the mesh ratio.
  const double h = init.grid.h;
  double lambda;
  int n_steps;
  if (cfg.lambda) {
    lambda = *cfg.lambda;
    if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
    n_steps = T > 0.0 ? static_cast<int>(
                            std::ceil(T / (lambda * h) * (1.0 - 1e-12)))
                      : 0;
  } else {
    const double target = cfg.cfl_target.value_or(0.25);
    if (!(target > 0.0) || target > 0.25) {
      throw ConfigError("cfl_target must lie in (0, 1/4]");
    }
    const double sup = sup_speed(f, init.values);
    const double lambda_max = sup > 0.0 ? target / sup : 1.0;
    if (T > 0.0) {
      n_steps = std::max(
          1, static_cast<int>(std::ceil(T / (lambda_max * h) * (1.0 - 1e-12))));
      lambda = T / n_steps / h;  // snapped so n_steps * tau == T
    } else {
      n_steps = 0;
      lambda = lambda_max;
    }
  }
  init.grid.lambda = lambda;
  return ResolvedRun{std::move(init), n_steps};
}

void require_margins_fixed(const StateSnapshot& prev,
                           const StateSnapshot& next) {
  const int n = static_cast<int>(prev.values.size());
  const bool margins_fixed =
      next.values[0] == prev.values[0] && next.values[1] == prev.values[1] &&
      next.values[n - 2] == prev.values[n - 2] &&
      next.values[n - 1] == prev.values[n - 1];
  if (!margins_fixed) {
    throw RunError("a wave reached the boundary margin at step " +
                   std::to_string(next.step) + "; enlarge the domain");
  }
}

}  // namespace

RunHistory run(const StateSnapshot& s0, const FluxModel& f,
               const SchemeConfig& cfg, double T) {
  ResolvedRun rr = prepare_run(s0, f, cfg, T);
  StateSnapshot& init = rr.init;
  const int n_steps = rr.n_steps;

  RunHistory hist;
  hist.flux = f;
  hist.scheme = cfg.scheme;
  hist.q_viscosity = cfg.q_viscosity;
  hist.lambda = init.grid.lambda;
  hist.tau = init.grid.tau();
  hist.n_steps = n_steps;
  hist.snapshots.reserve(n_steps + 1);
  hist.snapshots.push_back(std::move(init));

  for (int k = 0; k < n_steps; ++k) {
    const StateSnapshot& prev = hist.snapshots.back();
    StateSnapshot next = step(prev, f, cfg.scheme, cfg.q_viscosity);
    require_margins_fixed(prev, next);
    hist.snapshots.push_back(std::move(next));
  }
  return hist;
}

StateSnapshot run_final(const StateSnapshot& s0, const FluxModel& f,
                        const SchemeConfig& cfg, double T) {
  ResolvedRun rr = prepare_run(s0, f, cfg, T);
  StateSnapshot cur = std::move(rr.init);
  for (int k = 0; k < rr.n_steps; ++k) {
    StateSnapshot next = step(cur, f, cfg.scheme, cfg.q_viscosity);
    require_margins_fixed(cur, next);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace fv
