#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>

#include "hafield/ideal_field.hpp"
#include "test_util.hpp"

namespace hafield {
namespace {

using test::rel_diff;
using Real50 = boost::multiprecision::cpp_bin_float_50;

// Reference values computed with 40-digit mpmath from the defining formulas.
constexpr double kMu0Over2Pi = 2.000000001088751439e-7;
constexpr double kArrayR01N1256 = 5.784093756749762958e-4;  // brute-force sum, r = 0.02

TEST(SingleWire, UnitDistanceGivesZero) {
  EXPECT_EQ(single_wire_az(1.0, 1.0), 0.0);
  EXPECT_EQ(single_wire_az(1.0, -7.5), 0.0);
}

TEST(SingleWire, DistanceEGivesMinusMu0Over2Pi) {
  const double v = single_wire_az(std::exp(1.0), 1.0);
  EXPECT_LT(rel_diff(v, -kMu0Over2Pi), 1e-15);
  EXPECT_NEAR(v / -2.0e-7, 1.0, 1e-9);
}

TEST(SingleWire, HalfMetreTwoAmps) {
  EXPECT_LT(rel_diff(single_wire_az(0.5, 2.0), 2.772588723749111e-7), 1e-14);
}

TEST(SingleWire, NonPositiveDistanceIsDomainError) {
  EXPECT_THROW(single_wire_az(0.0, 1.0), DomainError);
  EXPECT_THROW(single_wire_az(-1.0, 1.0), DomainError);
}

TEST(ArrayClosed, MatchesBruteForceOracleInterior) {
  const WireArraySpec spec{0.1, 1256, 1.0};
  EXPECT_LT(rel_diff(array_az_closed(spec, 0.02), kArrayR01N1256), 1e-14);
  EXPECT_LT(rel_diff(array_az_closed(spec, 0.0), kArrayR01N1256), 1e-14);
}

TEST(ArrayClosed, InteriorValueIndependentOfRadiusBitwise) {
  const WireArraySpec spec{0.1, 1256, 1.0};
  const double ref = array_az_closed(spec, 0.02);
  EXPECT_EQ(array_az_closed(spec, 0.09), ref);
  EXPECT_EQ(array_az_closed(spec, 0.0), ref);
  EXPECT_EQ(array_az_closed(spec, 0.0999999), ref);
}

TEST(ArrayClosed, ExteriorMatchesBruteForce) {
  // mpmath: 64 wires on R = 0.1, observation at r = 0.3
  const WireArraySpec spec{0.1, 64, 1.0};
  EXPECT_LT(rel_diff(array_az_closed(spec, 0.3), 1.541085190376127e-5), 1e-13);
}

TEST(ArrayClosed, UnitRadiusInteriorIsZero) {
  const WireArraySpec spec{1.0, 37, 4.2};
  EXPECT_EQ(array_az_closed(spec, 0.3), 0.0);
  EXPECT_EQ(array_az_closed(spec, 0.999), 0.0);
}

TEST(ArrayClosed, OnCircleIsSingular) {
  const WireArraySpec spec{0.1, 10, 1.0};
  EXPECT_THROW(array_az_closed(spec, 0.1), SingularityError);
  EXPECT_THROW(array_az_closed(spec, -0.1), DomainError);
  EXPECT_THROW(array_az_closed({0.0, 10, 1.0}, 0.05), DomainError);
  EXPECT_THROW(array_az_closed({0.1, 0, 1.0}, 0.05), DomainError);
}

TEST(ArrayQuadrature, AxisValueMatchesClosedForm) {
  const WireArraySpec spec{0.1, 1256, 1.0};
  const double q = array_az_quadrature(spec, 0.0);
  EXPECT_LT(rel_diff(q, kArrayR01N1256), 1e-10);
}

TEST(ArrayQuadrature, OffAxisEqualsAxisValue) {
  const WireArraySpec spec{0.1, 1256, 1.0};
  EXPECT_LT(rel_diff(array_az_quadrature(spec, 0.05), array_az_quadrature(spec, 0.0)), 1e-10);
}

TEST(ArrayQuadrature, ZeroCurrentIsExactlyZero) {
  EXPECT_EQ(array_az_quadrature({0.1, 1256, 0.0}, 0.05), 0.0);
}

TEST(ArrayQuadrature, SingularAndInvalidArguments) {
  const WireArraySpec spec{0.2, 8, 1.0};
  EXPECT_THROW(array_az_quadrature(spec, 0.2), SingularityError);
  EXPECT_THROW(array_az_quadrature(spec, 0.1, {.rel_tol = 0.0}), DomainError);
}

TEST(ArrayQuadrature, TinyBudgetReportsEstimate) {
  const WireArraySpec spec{0.1, 100, 1.0};
  try {
    array_az_quadrature(spec, 0.0999, {.rel_tol = 1e-14, .max_evaluations = 20});
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_TRUE(std::isfinite(e.estimate()));
    EXPECT_GT(e.error_estimate(), 0.0);
  }
}

TEST(ArrayQuadrature, RandomCasesAgreeWithClosedForm) {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> radius(0.01, 0.09);
  std::uniform_int_distribution<int> count(1, 5000);
  std::uniform_real_distribution<double> current(-10.0, 10.0);
  std::uniform_real_distribution<double> inner(0.0, 0.95);
  std::uniform_real_distribution<double> outer(1.05, 10.0);
  for (int i = 0; i < 100; ++i) {
    const WireArraySpec spec{radius(rng), count(rng), current(rng)};
    const double ratio = (i % 2 == 0) ? inner(rng) : outer(rng);
    const double r = ratio * spec.radius;
    const double closed = array_az_closed(spec, r);
    const double quad = array_az_quadrature(spec, r);
    EXPECT_LE(std::abs(quad - closed), std::max(1e-10 * std::abs(closed), 1e-18))
        << "R=" << spec.radius << " r/R=" << ratio;
  }
}

TEST(DiscreteSuperposition, ConvergesMonotonicallyInterior) {
  // 50-digit arithmetic resolves the exponentially small interior error.
  const Real50 radius = Real50(0.1), r = Real50(0.05), current = Real50(1);
  Real50 previous = 1;
  for (int n : {8, 16, 32, 64, 128}) {
    const Real50 sum = array_az_discrete<Real50>(radius, n, current, r);
    const Real50 closed = -Real50(constants().mu0) / (2 * Real50(kPi)) * n * current * log(radius);
    const Real50 err = abs(sum - closed) / abs(closed);
    EXPECT_LT(err, previous) << "N=" << n;
    previous = err;
  }
}

TEST(DiscreteSuperposition, DoublePrecisionLargeArray) {
  const double sum = array_az_discrete(0.1, 1257, 1.0, 0.05);
  const double closed = array_az_closed({0.1, 1257, 1.0}, 0.05);
  EXPECT_LT(rel_diff(sum, closed), 1e-6);
}

AnnularCoilIdeal reference_coil(double current = 1.0) { return {0.1, 0.12, 1257, current}; }

TEST(AnnularCoil, AdditionalMomentumCoefficient) {
  const double p_add = constants().e * annular_coil_a(reference_coil());
  EXPECT_LT(std::abs(p_add - 7.331e-24) / 7.331e-24, 5e-3);
  EXPECT_LT(rel_diff(p_add, 7.343679045585941e-24), 1e-14);
}

TEST(AnnularCoil, CoincidentRadiiLimitIsZero) {
  const AnnularCoilIdeal coil{0.12 * (1.0 - 1e-12), 0.12, 1257, 1.0};
  // ln(R2 / R1) ~ 1e-12: the field vanishes linearly in the gap.
  const double ratio = annular_coil_a(coil) / annular_coil_a(reference_coil());
  EXPECT_NEAR(ratio, 1e-12 / std::log(1.2), 1e-4 * 1e-12 / std::log(1.2));
}

TEST(AnnularCoil, NegatedCurrentNegatesField) {
  EXPECT_EQ(annular_coil_a(reference_coil(-1.0)), -annular_coil_a(reference_coil(1.0)));
}

TEST(AnnularCoil, InvalidGeometry) {
  EXPECT_THROW(annular_coil_a({0.12, 0.1, 10, 1.0}), DomainError);
  EXPECT_THROW(annular_coil_a({0.0, 0.1, 10, 1.0}), DomainError);
  EXPECT_THROW(annular_coil_a({0.1, 0.12, 0, 1.0}), DomainError);
}

TEST(AnnularCoil, SuperpositionOfTwoCylinders) {
  const AnnularCoilIdeal coil = reference_coil(2.5);
  const WireArraySpec inner{coil.inner_radius, coil.turns, coil.current};
  const WireArraySpec outer{coil.outer_radius, coil.turns, -coil.current};
  for (double r : {0.0, 0.01, 0.05, 0.0999}) {
    const double sum = array_az_closed(inner, r) + array_az_closed(outer, r);
    EXPECT_LT(rel_diff(sum, annular_coil_a(coil)), 1e-13) << "r=" << r;
  }
}

TEST(CoilConstant, ReferenceGeometry) {
  EXPECT_EQ(turns_from_density(0.1, 2000.0), 1257);
  const double k = coil_constant(reference_coil());
  EXPECT_LT(std::abs(k - 4.576e-5) / 4.576e-5, 5e-3);
  EXPECT_LT(rel_diff(k, 4.583563940295200e-5), 1e-14);
  EXPECT_EQ(annular_coil_a(reference_coil(3.0)), k * 3.0);
}

TEST(CoilConstant, DoublingTurnsDoublesK) {
  AnnularCoilIdeal doubled = reference_coil();
  doubled.turns *= 2;
  EXPECT_EQ(coil_constant(doubled), 2.0 * coil_constant(reference_coil()));
}

TEST(CoilConstant, RadiusRatioEGivesMu0NOver2Pi) {
  const AnnularCoilIdeal coil{1.0, std::exp(1.0), 100, 1.0};
  EXPECT_LT(rel_diff(coil_constant(coil), 100 * kMu0Over2Pi), 1e-15);
}

TEST(Linearity, FieldsScaleWithCurrent) {
  const WireArraySpec a{0.3, 17, 1.0};
  const WireArraySpec b{0.3, 17, 4.0};
  EXPECT_EQ(array_az_closed(b, 0.1), 4.0 * array_az_closed(a, 0.1));
  EXPECT_LT(rel_diff(array_az_quadrature(b, 0.1), 4.0 * array_az_quadrature(a, 0.1)), 1e-14);
  EXPECT_EQ(single_wire_az(0.7, 4.0), 4.0 * single_wire_az(0.7, 1.0));
}

}  // namespace
}  // namespace hafield
