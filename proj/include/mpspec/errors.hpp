#pragma once

#include <stdexcept>
#include <string>

namespace mpspec {

/// Invalid run configuration (bad flag values, unsupported combinations).
/// CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Base class for runtime numerical failures. CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The constraint Gram matrix M is singular to working precision.
class ConstraintDegeneracyError : public NumericalError {
 public:
  ConstraintDegeneracyError(int Q, int N)
      : NumericalError("constraint matrix M singular to working precision (Q=" + std::to_string(Q) +
                       ", N=" + std::to_string(N) + ")"),
        Q(Q),
        N(N) {}
  int Q, N;
};

/// Non-finite state encountered while time stepping.
class BlowUpError : public NumericalError {
 public:
  explicit BlowUpError(long step)
      : NumericalError("non-finite state at step " + std::to_string(step)), step(step) {}
  long step;
};

/// Gram-Schmidt orthonormalization lost too much orthogonality.
class OrthogonalityLossError : public NumericalError {
 public:
  OrthogonalityLossError(double residual, int n)
      : NumericalError("orthogonality residual " + std::to_string(residual) + " with " +
                       std::to_string(n) + " modes; reduce the basis size") {}
};

}  // namespace mpspec
