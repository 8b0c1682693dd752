#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hafield/diffraction.hpp"
#include "hafield/errors.hpp"
#include "hafield/regression.hpp"
#include "test_util.hpp"

namespace hafield {
namespace {

using test::rel_diff;

const GratingScreenSpec kGrating{.spacing = 2.55e-10, .screen_distance = 0.1};
constexpr double kReferenceK = 4.583563940295200e-5;

TEST(LinearResponseFit, NoiselessCurrentSweepRecoversCoefficients) {
  std::vector<LinearResponseSample> samples;
  for (int i = -10; i <= 10; ++i) {
    samples.push_back({30e3, double(i), inverse_interfringe(30e3, i, kReferenceK, kGrating)});
  }
  const auto fit = linear_response_fit(samples);
  EXPECT_GE(fit.r_squared, 1.0 - 1e-12);
  EXPECT_LT(rel_diff(fit.beta, inverse_interfringe_beta(kReferenceK, kGrating)), 1e-10);
  EXPECT_LT(rel_diff(fit.alpha, inverse_interfringe_alpha(kGrating)), 1e-10);
}

TEST(LinearResponseFit, VoltageAndCurrentGrid) {
  std::vector<LinearResponseSample> samples;
  for (double u : {10e3, 20e3, 30e3, 50e3}) {
    for (double i : {-5.0, 0.0, 5.0}) {
      samples.push_back({u, i, inverse_interfringe(u, i, kReferenceK, kGrating)});
    }
  }
  const auto fit = linear_response_fit(samples);
  EXPECT_LT(rel_diff(fit.alpha, inverse_interfringe_alpha(kGrating)), 1e-10);
  EXPECT_LT(rel_diff(fit.beta, inverse_interfringe_beta(kReferenceK, kGrating)), 1e-10);
}

TEST(LinearResponseFit, ZeroCurrentDesignIsRankDeficient) {
  const std::vector<LinearResponseSample> samples{{10e3, 0.0, 200.0}, {30e3, 0.0, 360.0}};
  EXPECT_THROW(linear_response_fit(samples), FitError);
}

TEST(LinearResponseFit, IdenticalSamplesAreRankDeficient) {
  const std::vector<LinearResponseSample> samples{{30e3, 1.0, 380.0}, {30e3, 1.0, 380.0}, {30e3, 1.0, 380.0}};
  EXPECT_THROW(linear_response_fit(samples), FitError);
  EXPECT_THROW(linear_response_fit(std::span<const LinearResponseSample>{}), FitError);
}

TEST(LinearResponseFit, PublishedEndpointPair) {
  const std::vector<LinearResponseSample> samples{{30e3, -10.0, 78.58}, {30e3, 10.0, 641.84}};
  const auto fit = linear_response_fit(samples);
  EXPECT_NEAR(fit.beta, (641.84 - 78.58) / 20.0, 1e-10);
  EXPECT_LT(std::abs(fit.beta - 28.16) / 28.16, 2e-2);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
}

TEST(LinearResponseFit, NoisyDataLowersRSquared) {
  std::vector<LinearResponseSample> samples;
  for (int i = -10; i <= 10; ++i) {
    const double noise = (i % 2 == 0 ? 1.0 : -1.0) * 20.0;
    samples.push_back({30e3, double(i), inverse_interfringe(30e3, i, kReferenceK, kGrating) + noise});
  }
  const auto fit = linear_response_fit(samples);
  EXPECT_LT(fit.r_squared, 0.999);
  EXPECT_GT(fit.r_squared, 0.9);
}

TEST(FitThroughOrigin, VoltageSweepSlope) {
  std::vector<double> x, y;
  for (double u = 10e3; u <= 50e3; u += 5e3) {
    x.push_back(std::sqrt(u));
    y.push_back(inverse_interfringe(u, 0.0, kReferenceK, kGrating));
  }
  const auto fit = fit_through_origin(x, y);
  EXPECT_LT(rel_diff(fit.slope, inverse_interfringe_alpha(kGrating)), 1e-12);
  EXPECT_GE(fit.r_squared, 1.0 - 1e-12);
}

TEST(FitThroughOrigin, Errors) {
  const std::vector<double> x{0.0, 0.0}, y{1.0, 2.0}, shorter{1.0};
  EXPECT_THROW(fit_through_origin(x, y), FitError);
  EXPECT_THROW(fit_through_origin(x, shorter), FitError);
}

}  // namespace
}  // namespace hafield
