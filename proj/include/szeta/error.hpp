#pragma once

#include <stdexcept>
#include <string>

namespace szeta {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinate outside [-a/2, a/2].
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Density is not strictly positive / finite, or malformed table data.
class ProfileError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameter value (n = 0, alpha <= -1, negative tail eigenvalue, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// green_plus called with x < y.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// Requested order or mode count is beyond what the method supports.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Discretization produced something it should not (indefinite kernel, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Input table is missing orders or holds non-positive values.
class DataError : public Error {
 public:
  using Error::Error;
};

/// The tail estimate swallows the sum rule: Z(q) <= tail(q).
class TailInconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Accuracy target missed. Carries the best value reached and its error estimate.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best, double estimate)
      : Error(what), best_(best), estimate_(estimate) {}

  double best() const noexcept { return best_; }
  double estimate() const noexcept { return estimate_; }

 private:
  double best_;
  double estimate_;
};

}  // namespace szeta
