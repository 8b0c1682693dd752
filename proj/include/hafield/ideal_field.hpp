#pragma once

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "hafield/constants.hpp"
#include "hafield/errors.hpp"

// Vector potential of infinite straight wires, circular wire arrays and the
// ideal (infinitely long) annular coil. All fields point along the symmetry
// axis z; positive current flows along +z on the inner cylinder.

namespace hafield {

/// N infinite wires parallel to z, spaced uniformly in azimuth on radius R,
/// each carrying `current`.
struct WireArraySpec {
  double radius;    ///< R [m]
  int wire_count;   ///< N
  double current;   ///< I [A], signed

  void validate() const;
};

/// Ideal toroidal coil of rectangular section, infinite length.
struct AnnularCoilIdeal {
  double inner_radius;  ///< R1 [m]
  double outer_radius;  ///< R2 [m]
  int turns;            ///< N
  double current;       ///< I [A]; positive flows +z on the inner cylinder

  void validate() const;
};

/// A_z = -mu0 I / (2 pi) ln r of an infinite wire at distance r.
template <class Real>
Real single_wire_az(Real r, Real current) {
  using std::log;
  if (!(r > Real(0))) throw DomainError("single_wire_az: distance must be positive");
  const Real mu0_over_2pi = Real(constants().mu0) / (Real(2) * Real(kPi));
  return -mu0_over_2pi * current * log(r);
}

struct QuadratureOptions {
  double rel_tol = 1e-10;
  long max_evaluations = 1'000'000;
};

/// A_z of a wire array at distance r from the axis, by adaptive
/// Gauss-Kronrod integration of the azimuthal log integral.
double array_az_quadrature(const WireArraySpec& spec, double r, QuadratureOptions opts = {});

/// Closed form: -mu0 N I / (2 pi) ln max(R, r). Constant for r < R.
double array_az_closed(const WireArraySpec& spec, double r);

/// Explicit sum of single_wire_az over the N wires at azimuths 2 pi k / N,
/// observation point at azimuth 0.
template <class Real>
Real array_az_discrete(Real radius, int wire_count, Real current, Real r) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  Real sum = 0;
  const Real two_pi = boost::math::constants::two_pi<Real>();
  for (int k = 0; k < wire_count; ++k) {
    const Real phi = two_pi * Real(k) / Real(wire_count);
    const Real s = sin(phi / 2);
    const Real d = radius - r;
    // rho^2 = (R - r)^2 + 4 R r sin^2(phi/2), cancellation free
    const Real rho = sqrt(d * d + Real(4) * radius * r * s * s);
    sum += single_wire_az<Real>(rho, current);
  }
  return sum;
}

/// K = mu0 N / (2 pi) ln(R2 / R1)  [T m / A].
double coil_constant(const AnnularCoilIdeal& coil);

/// Homogeneous interior value A = K I  [T m].
double annular_coil_a(const AnnularCoilIdeal& coil);

/// Integer turn count of a winding with `turn_density` wires per metre of
/// inner circumference: round(2 pi R1 n).
int turns_from_density(double inner_radius, double turn_density);

}  // namespace hafield
