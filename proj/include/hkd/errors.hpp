#pragma once

#include <stdexcept>
#include <string>

namespace hkd {

/// Malformed user input: bad pair specs, unbounded regions, non-lattice
/// polytopes. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The exact geometric path is only implemented for small ambient
/// dimension. The CLI maps this to exit code 3.
class UnsupportedDimension : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical routine could not certify its result (interpolation
/// verification failed, not enough sample points, ...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hkd
