#include "hafield/ideal_field.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

namespace hafield {

namespace {

constexpr int kKronrodPoints = 15;

// Deepest bisection level whose worst case stays inside the evaluation budget.
unsigned depth_for_budget(long max_evaluations) {
  unsigned depth = 0;
  while (depth < 40 &&
         static_cast<double>(kKronrodPoints) * (std::ldexp(1.0, static_cast<int>(depth) + 2) - 1.0) <=
             static_cast<double>(max_evaluations)) {
    ++depth;
  }
  return depth;
}

void check_off_circle(double radius, double r, const char* who) {
  if (r == radius) {
    throw SingularityError(std::string(who) + ": observation radius lies on the wire circle");
  }
}

}  // namespace

void WireArraySpec::validate() const {
  if (!(radius > 0.0)) throw DomainError("wire array radius must be positive");
  if (wire_count < 1) throw DomainError("wire array needs at least one wire");
}

void AnnularCoilIdeal::validate() const {
  if (!(inner_radius > 0.0) || !(outer_radius > inner_radius)) {
    throw DomainError("annular coil requires 0 < R1 < R2");
  }
  if (turns < 1) throw DomainError("annular coil needs at least one turn");
}

double array_az_quadrature(const WireArraySpec& spec, double r, QuadratureOptions opts) {
  spec.validate();
  if (!(r >= 0.0)) throw DomainError("array_az_quadrature: r must be non-negative");
  if (!(opts.rel_tol > 0.0)) throw DomainError("array_az_quadrature: tolerance must be positive");
  check_off_circle(spec.radius, r, "array_az_quadrature");
  if (spec.current == 0.0) return 0.0;

  const double R = spec.radius;
  const double d2 = (R - r) * (R - r);
  const double four_Rr = 4.0 * R * r;
  // ln(R^2 + r^2 - 2 R r cos x) written without cancellation near x = 0
  auto integrand = [&](double x) {
    const double s = std::sin(0.5 * x);
    return std::log(d2 + four_Rr * s * s);
  };

  double error = 0.0;
  double l1 = 0.0;
  const unsigned max_depth = depth_for_budget(opts.max_evaluations);
  // Symmetric about pi; integrate half and double.
  const double half = boost::math::quadrature::gauss_kronrod<double, kKronrodPoints>::integrate(
      integrand, 0.0, kPi, max_depth, opts.rel_tol, &error, &l1);
  const double integral = 2.0 * half;
  const double scale = -constants().mu0 * spec.wire_count * spec.current / (8.0 * kPi * kPi);
  if (!(error <= opts.rel_tol * l1) || !std::isfinite(integral)) {
    throw QuadratureError("array_az_quadrature: tolerance not reached within evaluation budget",
                          scale * integral, std::abs(scale) * 2.0 * error);
  }
  return scale * integral;
}

double array_az_closed(const WireArraySpec& spec, double r) {
  spec.validate();
  if (!(r >= 0.0)) throw DomainError("array_az_closed: r must be non-negative");
  check_off_circle(spec.radius, r, "array_az_closed");
  const double outer = std::max(spec.radius, r);
  return -constants().mu0 * spec.wire_count * spec.current / (2.0 * kPi) * std::log(outer);
}

double coil_constant(const AnnularCoilIdeal& coil) {
  coil.validate();
  return constants().mu0 * coil.turns / (2.0 * kPi) *
         std::log(coil.outer_radius / coil.inner_radius);
}

double annular_coil_a(const AnnularCoilIdeal& coil) { return coil_constant(coil) * coil.current; }

int turns_from_density(double inner_radius, double turn_density) {
  if (!(inner_radius > 0.0) || !(turn_density > 0.0)) {
    throw DomainError("turn count needs positive radius and turn density");
  }
  return static_cast<int>(std::lround(2.0 * kPi * inner_radius * turn_density));
}

}  // namespace hafield
