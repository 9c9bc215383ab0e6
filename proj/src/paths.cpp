#include "fv1d/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fv1d/errors.hpp"

namespace fv {
namespace {

int hull_distance(const ExtremumRecord& a, const ExtremumRecord& b) {
  return std::max({b.first_cell - a.last_cell, a.first_cell - b.last_cell, 0});
}

bool value_admissible(const ExtremumRecord& prev, const ExtremumRecord& next) {
  const double slack = 1e-12 * std::max(1.0, std::abs(prev.value));
  return prev.is_max ? next.value <= prev.value + slack
                     : next.value >= prev.value - slack;
}

int epsilon_for(const ArrayXd& u, const ExtremumRecord& e) {
  // Literal neighbor jumps at the representative cell, the same measure the
  // oscillation bound minimizes; for a plateau wider than one cell the inner
  // neighbor is equal, so the shift lands on the plateau interior. Measuring
  // at the plateau edges instead breaks the one-cell bound on the shifted
  // index when a wide plateau erodes on both sides in a single step.
  const int j = e.representative();
  const double left = std::abs(u[j] - u[j - 1]);
  const double right = std::abs(u[j + 1] - u[j]);
  return right < left ? 1 : 0;
}

}  // namespace

std::vector<int> match_extrema(const std::vector<ExtremumRecord>& prev,
                               const std::vector<ExtremumRecord>& next) {
  std::vector<int> out(prev.size(), -1);
  std::size_t cursor = 0;
  for (std::size_t k = 0; k < next.size(); ++k) {
    bool found = false;
    for (std::size_t i = cursor; i < prev.size(); ++i) {
      if (prev[i].is_max == next[k].is_max &&
          hull_distance(prev[i], next[k]) <= 1 &&
          value_admissible(prev[i], next[k])) {
        out[i] = static_cast<int>(k);
        cursor = i + 1;
        found = true;
        break;
      }
    }
    if (!found) {
      throw MatchError(
          "no ancestor for an extremum; the scheme created or teleported an "
          "extremum between steps");
    }
  }
  return out;
}

PathSet build_paths(const RunHistory& h) {
  PathSet ps;
  ps.n_steps = h.n_steps;
  auto prev = detect_extrema(h.initial().values);

  // Ids: consecutive left to right, parity = kind (maxima even).
  int next_id = 0;
  if (!prev.empty() && !prev.front().is_max) next_id = 1;
  std::vector<int> live;  // live[i] = path index currently at record i
  for (const auto& e : prev) {
    if ((next_id % 2 == 0) != e.is_max) ++next_id;
    ExtremumPath p;
    p.id = next_id++;
    p.is_max = e.is_max;
    p.birth_step = 0;
    p.stop_step = 0;
    p.nodes.push_back({0, e.representative(), e.first_cell, e.last_cell,
                       e.value, 0});
    live.push_back(static_cast<int>(ps.paths.size()));
    ps.paths.push_back(std::move(p));
  }

  for (int n = 0; n + 1 < static_cast<int>(h.snapshots.size()); ++n) {
    const auto next = detect_extrema(h.snapshots[n + 1].values);
    const auto corr = match_extrema(prev, next);
    std::vector<int> new_live(next.size(), -1);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      const int path_idx = live[i];
      if (corr[i] >= 0) {
        const auto& e = next[corr[i]];
        ps.paths[path_idx].nodes.push_back({n + 1, e.representative(),
                                            e.first_cell, e.last_cell, e.value,
                                            0});
        ps.paths[path_idx].stop_step = n + 1;
        new_live[corr[i]] = path_idx;
      } else {
        ps.paths[path_idx].alive_at_end = false;
      }
    }
    prev = next;
    live = std::move(new_live);
  }
  for (auto& p : ps.paths) {
    p = shift_path(p, h);
  }
  return ps;
}

ExtremumPath shift_path(const ExtremumPath& path, const RunHistory& h) {
  ExtremumPath out = path;
  for (auto& node : out.nodes) {
    const ArrayXd& u = h.snapshots[node.step].values;
    ExtremumRecord e{node.first_cell, node.last_cell, out.is_max, node.value};
    node.epsilon = epsilon_for(u, e);
  }
  return out;
}

DiagnosticReport check_path_structure(const RunHistory& h, const PathSet& ps) {
  DiagnosticReport r;
  r.check = "paths";
  r.params.lambda = h.lambda;
  for (const auto& s : h.snapshots) {
    r.extrema_per_step.push_back(
        static_cast<int>(detect_extrema(s.values).size()));
  }
  // Alive counts never increase (no births).
  std::vector<int> alive(h.n_steps + 1, 0);
  for (const auto& p : ps.paths) {
    for (int n = p.birth_step; n <= p.stop_step; ++n) ++alive[n];
  }
  for (int n = 0; n + 1 <= h.n_steps; ++n) {
    if (alive[n + 1] > alive[n]) {
      r.violations.push_back({r.check, n + 1, 0,
                              static_cast<double>(alive[n + 1]),
                              static_cast<double>(alive[n]),
                              static_cast<double>(alive[n + 1] - alive[n])});
    }
  }
  for (const auto& p : ps.paths) {
    const double slack = 1e-12;
    for (std::size_t k = 0; k + 1 < p.nodes.size(); ++k) {
      const PathNode& a = p.nodes[k];
      const PathNode& b = p.nodes[k + 1];
      // Hull motion of at most one cell per step.
      const int dist = std::max(
          {b.first_cell - a.last_cell, a.first_cell - b.last_cell, 0});
      if (dist > 1) {
        r.violations.push_back({r.check, b.step, b.cell,
                                static_cast<double>(dist), 1.0,
                                static_cast<double>(dist - 1)});
      }
      // Extremum value monotone along the path.
      const double drift = p.is_max ? b.value - a.value : a.value - b.value;
      if (drift > slack * std::max(1.0, std::abs(a.value))) {
        r.violations.push_back({r.check, b.step, b.cell, drift, 0.0, drift});
      }
      // Shifted index moves by at most one grid point.
      const int move = (b.cell + b.epsilon) - (a.cell + a.epsilon);
      if (std::abs(move) > 1) {
        r.violations.push_back({r.check, b.step, b.cell,
                                static_cast<double>(std::abs(move)), 1.0,
                                static_cast<double>(std::abs(move) - 1)});
      }
    }
  }
  // Left-to-right ordering among simultaneously alive paths.
  for (int n = 0; n <= h.n_steps; ++n) {
    int last_cell = -1;
    int last_id = -1;
    for (const auto& p : ps.paths) {
      if (n < p.birth_step || n > p.stop_step) continue;
      const auto it =
          std::find_if(p.nodes.begin(), p.nodes.end(),
                       [&](const PathNode& nd) { return nd.step == n; });
      if (it == p.nodes.end()) continue;
      if (last_cell >= 0 && it->cell <= last_cell) {
        r.violations.push_back({r.check, n, it->cell,
                                static_cast<double>(last_cell),
                                static_cast<double>(it->cell),
                                static_cast<double>(last_cell - it->cell)});
      }
      last_cell = it->cell;
      last_id = p.id;
    }
    (void)last_id;
  }
  r.pass = r.violations.empty();
  return r;
}

DiagnosticReport check_oscillation_bound(const ExtremumPath& path,
                                         const RunHistory& h, double beta) {
  DiagnosticReport r;
  r.check = "oscillation";
  r.params.beta = beta;
  r.params.lambda = h.lambda;
  constexpr double kSlack = 1e-10;
  // The window condition over all p < q,
  //   beta * (S_q - S_p) <= sign * (w_p - w_q) + slack,
  // is equivalent to D_q <= min_{p<q} D_p + slack with
  // D_k = beta * S_k + sign * w_k, handled in one pass.
  double s = 0.0;  // S_k: prefix sum of min(|jump|, jump^2) over nodes < k
  double best = std::numeric_limits<double>::infinity();
  for (const PathNode& node : path.nodes) {
    const double w = path.is_max ? node.value : -node.value;
    const double d = beta * s + w;
    if (best < std::numeric_limits<double>::infinity() && d > best + kSlack) {
      r.violations.push_back({r.check, node.step, node.cell, d, best, d - best});
    }
    best = std::min(best, d);
    const ArrayXd& u = h.snapshots[node.step].values;
    const double jl = std::abs(u[node.cell] - u[node.cell - 1]);
    const double jr = std::abs(u[node.cell] - u[node.cell + 1]);
    const double jump = std::min(jl, jr);
    s += std::min(jump, jump * jump);
  }
  r.pass = r.violations.empty();
  return r;
}

DiagnosticReport check_oscillation_bound(const PathSet& ps,
                                         const RunHistory& h, double beta) {
  DiagnosticReport r;
  r.check = "oscillation";
  r.params.beta = beta;
  r.params.lambda = h.lambda;
  for (const auto& s : h.snapshots) {
    r.extrema_per_step.push_back(
        static_cast<int>(detect_extrema(s.values).size()));
  }
  for (const auto& p : ps.paths) {
    const DiagnosticReport sub = check_oscillation_bound(p, h, beta);
    r.violations.insert(r.violations.end(), sub.violations.begin(),
                        sub.violations.end());
  }
  r.pass = r.violations.empty();
  return r;
}

}  // namespace fv
