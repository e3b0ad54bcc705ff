#pragma once

#include <stdexcept>
#include <string>

namespace wwmtc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A target value is valid in principle but not reachable by the model.
/// Carries the feasible interval so callers can report it.
class OutOfRangeError : public Error {
 public:
  OutOfRangeError(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// Floating-point evaluation became unreliable.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Input data cannot support the requested fit.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Iterative fit hit its iteration budget. best_residual is the RMS residual
/// of the best parameters seen.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace wwmtc
