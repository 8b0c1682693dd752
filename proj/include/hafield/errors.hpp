#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hafield {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point coincides with a source (wire circle or segment guard).
class SingularityError : public DomainError {
 public:
  explicit SingularityError(const std::string& what,
                            std::size_t segment_index = npos)
      : DomainError(what), segment_index_(segment_index) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Index of the offending segment, or npos when not segment related.
  std::size_t segment_index() const noexcept { return segment_index_; }

 private:
  std::size_t segment_index_;
};

/// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double estimate, double error)
      : Error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

/// Effective momentum mv + eA is not positive.
class ModelDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Grating equation has no solution for a requested order.
class OrderLimitError : public DomainError {
 public:
  OrderLimitError(const std::string& what, int max_feasible_order)
      : DomainError(what), max_order_(max_feasible_order) {}

  int max_feasible_order() const noexcept { return max_order_; }

 private:
  int max_order_;
};

/// Winding cannot be built (overlapping turns, bad discretization).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Least-squares design is rank deficient or underdetermined.
class FitError : public Error {
 public:
  using Error::Error;
};

/// Mismatched or unknown physical unit.
class UnitError : public Error {
 public:
  using Error::Error;
};

/// Scenario or command-line configuration problem.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hafield
