#pragma once

#include <vector>

#include "fv1d/diagnostics.hpp"
#include "fv1d/extrema.hpp"
#include "fv1d/stepper.hpp"

namespace fv {

// One extremum at one step along a path. cell is the plateau representative
// (leftmost plateau cell); epsilon picks the neighbor side of that cell with
// the smaller literal jump (0 = left, 1 = right, ties left) once filled.
struct PathNode {
  int step = 0;
  int cell = 0;
  int first_cell = 0;
  int last_cell = 0;
  double value = 0.0;
  int epsilon = 0;
};

// A tracked extremum. Ids are assigned left to right at step 0 with parity
// encoding the kind (maxima even, minima odd); consecutive extrema get
// consecutive ids. stop_step is the last step the extremum exists.
struct ExtremumPath {
  int id = 0;
  bool is_max = true;
  int birth_step = 0;
  int stop_step = 0;
  bool alive_at_end = true;
  std::vector<PathNode> nodes;
};

struct PathSet {
  std::vector<ExtremumPath> paths;
  int n_steps = 0;
};

// Ancestor correspondence between consecutive steps: result[i] is the index
// in next continuing prev[i], or -1 if prev[i] terminates. Every record in
// next must be matched (no births); same kind, plateau hulls within distance
// 1, max values nonincreasing / min values nondecreasing (1e-12 slack).
// Order-preserving greedy; throws MatchError when no admissible matching
// exists.
std::vector<int> match_extrema(const std::vector<ExtremumRecord>& prev,
                               const std::vector<ExtremumRecord>& next);

// Tracks every step-0 extremum through the run and fills the epsilon shifts.
// Throws MatchError if the correspondence breaks (scheme creating extrema).
PathSet build_paths(const RunHistory& h);

// Copy of the path with epsilon recomputed from the history (the smaller
// neighbor-jump side at each node's representative cell).
ExtremumPath shift_path(const ExtremumPath& path, const RunHistory& h);

// Structural invariants: alive counts nonincreasing, hull moves at most one
// cell per step, extremum values monotone along each path, left-to-right
// ordering preserved, shifted index J + epsilon moves by at most one.
DiagnosticReport check_path_structure(const RunHistory& h, const PathSet& ps);

// Oscillation bound along one path: for every window [p, q] of its life,
// beta * sum_{n=p}^{q-1} min(|D_n|, D_n^2) <= drop of the extremum value over
// the window + 1e-10, where D_n is the smaller-magnitude literal neighbor
// jump at the representative cell. Mirrored for min paths.
DiagnosticReport check_oscillation_bound(const ExtremumPath& path,
                                         const RunHistory& h, double beta);

// All paths combined into one report.
DiagnosticReport check_oscillation_bound(const PathSet& ps,
                                         const RunHistory& h, double beta);

}  // namespace fv
