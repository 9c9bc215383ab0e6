#pragma once

#include <stdexcept>

namespace fv {

// Invalid configuration or model definition (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runtime guard tripped during time stepping (CFL violation, wave reaching
// the boundary margin, non-finite state).
struct RunError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Nonlinear solve failed to converge or lost its bracket.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Extremum correspondence between consecutive steps could not be established.
struct MatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fv
