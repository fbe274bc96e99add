#ifndef FLATLAB_ERRORS_HPP
#define FLATLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flatlab {

// Precondition violations (bad sizes, non-prime moduli, stage mismatches).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured size cap (RS stage, prime bound, grid cap).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is valid in principle but outside what the implementation supports
// (Singer sets above the search bound, exhaustive searches above N = 24).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial vanishes on too much of the grid for a log-average.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flatlab

#endif  // FLATLAB_ERRORS_HPP
