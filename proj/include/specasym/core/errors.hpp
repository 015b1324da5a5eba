#pragma once

#include <stdexcept>
#include <string>

namespace specasym {

// Bad input: a precondition of an operation was violated.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative procedure ran out of budget before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested quantity lies outside the range where the available data can
// be trusted (truncated spectra, energies above the reliability cutoff, ...).
class UntrustedRangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace specasym
