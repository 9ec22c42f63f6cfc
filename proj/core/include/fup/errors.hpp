#pragma once

#include <stdexcept>

namespace fup {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Cantor iteration depth above the streaming or materialization cap.
class DepthExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Eigenvalue index above the spectrum cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Iterative evaluation (series, continued fraction, quadrature) did not
/// reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fup
