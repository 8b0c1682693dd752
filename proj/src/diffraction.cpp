#include "hafield/diffraction.hpp"

#include <cmath>
#include <string>

#include "hafield/constants.hpp"
#include "hafield/errors.hpp"

namespace hafield {

void BeamSpec::validate() const {
  if (!(voltage > 0.0)) throw DomainError("accelerating voltage must be positive");
  if (!(beam_width > 0.0)) throw DomainError("beam width must be positive");
  if (std::abs(norm(axis) - 1.0) > 1e-12) throw DomainError("beam axis must be a unit vector");
}

void GratingScreenSpec::validate() const {
  if (!(spacing > 0.0)) throw DomainError("grating spacing must be positive");
  if (!(screen_distance > 0.0)) throw DomainError("screen distance must be positive");
}

double mechanical_momentum(double voltage, MomentumModel model) {
  if (!(voltage > 0.0)) throw DomainError("accelerating voltage must be positive");
  const auto& c = constants();
  const double p2 = 2.0 * c.m_e * c.e * voltage;
  if (model == MomentumModel::relativistic) {
    const double w = c.e * voltage / kSpeedOfLight;
    return std::sqrt(p2 + w * w);
  }
  return std::sqrt(p2);
}

double de_broglie_lambda(double momentum) {
  if (!(momentum > 0.0)) throw DomainError("momentum must be positive");
  return constants().h / momentum;
}

double effective_momentum(double voltage, double vector_potential, MomentumModel model) {
  const double p = mechanical_momentum(voltage, model) + constants().e * vector_potential;
  if (!(p > 0.0)) {
    throw ModelDomainError("effective momentum mv + eA = " + std::to_string(p) +
                           " kg m/s is not positive");
  }
  return p;
}

double effective_momentum(const BeamSpec& beam, const Vec3& vector_potential, MomentumModel model) {
  beam.validate();
  return effective_momentum(beam.voltage, dot(vector_potential, beam.axis), model);
}

FringePattern fringe_pattern(const BeamSpec& beam, const GratingScreenSpec& gs,
                             double vector_potential, int k_max, MomentumModel model) {
  beam.validate();
  gs.validate();
  if (k_max < 1) throw DomainError("fringe_pattern needs k_max >= 1");

  FringePattern pat;
  pat.p_eff = effective_momentum(beam.voltage, vector_potential, model);
  pat.lambda = de_broglie_lambda(pat.p_eff);
  const double ratio = pat.lambda / gs.spacing;
  if (!(k_max * ratio < 1.0)) {
    const int feasible = static_cast<int>(std::ceil(1.0 / ratio)) - 1;
    throw OrderLimitError("grating equation has no solution for order " + std::to_string(k_max) +
                              "; highest feasible order is " + std::to_string(feasible),
                          feasible);
  }

  const double d = gs.screen_distance;
  pat.orders.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    const double s = k * ratio;
    const double theta = std::asin(s);
    const double y = d * std::tan(theta);
    pat.orders.push_back({k, theta, y, y, k * pat.lambda * d / gs.spacing});
  }
  pat.interfringe_exact = pat.orders[1].y - pat.orders[0].y;
  pat.interfringe_small_angle = pat.lambda * d / gs.spacing;

  const double s1 = std::sin(pat.orders[1].theta);
  pat.small_angle_valid = std::abs(std::tan(pat.orders[1].theta) - s1) / s1 < 1e-3;
  pat.distant_screen_valid = d >= 10.0 * pat.orders.back().y;
  return pat;
}

double inverse_interfringe(double voltage, double current, double coil_constant,
                           const GratingScreenSpec& gs, MomentumModel model) {
  gs.validate();
  const double p = effective_momentum(voltage, coil_constant * current, model);
  return gs.spacing * p / (constants().h * gs.screen_distance);
}

double inverse_interfringe_alpha(const GratingScreenSpec& gs) {
  const auto& c = constants();
  return gs.spacing * std::sqrt(2.0 * c.m_e * c.e) / (c.h * gs.screen_distance);
}

double inverse_interfringe_beta(double coil_constant, const GratingScreenSpec& gs) {
  const auto& c = constants();
  return gs.spacing * c.e * coil_constant / (c.h * gs.screen_distance);
}

}  // namespace hafield
