#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

/// Malformed tensor description (bad order, dimension or generator length).
class InvalidSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An FFT product left an imaginary residue too large to be rounding noise.
class NumericalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The dense oracle was asked to materialize more entries than its cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// B x^m <= 0, so the reference tensor is not positive definite at x.
class InvalidReferenceTensorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The solvers only handle even tensor orders.
class UnsupportedOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hankel
