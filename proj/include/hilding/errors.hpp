#pragma once

#include <stdexcept>

namespace hilding {

// Invalid input: bad shapes, mixed exponents, out-of-range parameters,
// degenerate bases, malformed problem files.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation could not complete soundly: iteration caps hit, a bound
// that must be established numerically failed, a rank jumped along a path.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hilding
