#include "hafield/regression.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "hafield/errors.hpp"

namespace hafield {

namespace {

double r_squared(const Eigen::VectorXd& y, const Eigen::VectorXd& fitted) {
  const double ss_res = (y - fitted).squaredNorm();
  const double ss_tot = (y.array() - y.mean()).matrix().squaredNorm();
  if (ss_tot == 0.0) return ss_res == 0.0 ? 1.0 : 0.0;
  return 1.0 - ss_res / ss_tot;
}

}  // namespace

LinearResponseFit linear_response_fit(std::span<const LinearResponseSample> samples) {
  const auto n = static_cast<Eigen::Index>(samples.size());
  if (n < 2) throw FitError("linear response fit needs at least two samples");

  Eigen::MatrixXd x(n, 2);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    if (!(s.voltage >= 0.0)) throw FitError("sample voltage must be non-negative");
    x(i, 0) = std::sqrt(s.voltage);
    x(i, 1) = s.current;
    y(i) = s.inverse_interfringe;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  qr.setThreshold(1e-12);
  if (qr.rank() < 2) {
    throw FitError("rank-deficient design: sqrt(U) and I columns are not independent");
  }
  const Eigen::Vector2d coef = qr.solve(y);
  return {coef(0), coef(1), r_squared(y, x * coef)};
}

OriginFit fit_through_origin(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw FitError("x and y differ in length");
  if (x.empty()) throw FitError("fit through origin needs samples");
  const auto n = static_cast<Eigen::Index>(x.size());
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(), n);
  const Eigen::Map<const Eigen::VectorXd> yv(y.data(), n);
  const double sxx = xv.squaredNorm();
  if (sxx == 0.0) throw FitError("all regressor values are zero");
  const double slope = xv.dot(yv) / sxx;
  return {slope, r_squared(yv, xv * slope)};
}

}  // namespace hafield
