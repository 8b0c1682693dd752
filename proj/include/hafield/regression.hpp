#pragma once

#include <span>

namespace hafield {

struct LinearResponseSample {
  double voltage;            ///< U [V]
  double current;            ///< I [A]
  double inverse_interfringe;  ///< 1 / i [1/m]
};

struct LinearResponseFit {
  double alpha;      ///< coefficient of sqrt(U)
  double beta;       ///< coefficient of I
  double r_squared;  ///< 1 - SS_res / SS_tot (centred)
};

/// Ordinary least squares of 1/i against (sqrt(U), I), no intercept.
/// Throws FitError for fewer than two samples or a rank-deficient design.
LinearResponseFit linear_response_fit(std::span<const LinearResponseSample> samples);

struct OriginFit {
  double slope;
  double r_squared;
};

/// Least squares y = slope * x through the origin.
OriginFit fit_through_origin(std::span<const double> x, std::span<const double> y);

}  // namespace hafield
