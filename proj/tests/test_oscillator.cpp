#include <cmath>

#include <gtest/gtest.h>

#include "modeconv/errors.hpp"
#include "modeconv/oscillator.hpp"
#include "oracles.hpp"

namespace modeconv::oscillator {
namespace {

TEST(BuildModel, HarmonicSpectrumAndIdentityEigenvectors) {
  const auto model = build_model(0.0, 64);
  for (std::size_t n = 0; n < 64; ++n) EXPECT_NEAR(model.energy(n), n + 0.5, 1e-10);
  EXPECT_LE((model.eigenvectors() - Eigen::MatrixXd::Identity(64, 64)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(BuildModel, RejectsNegativeLambdaAndSmallTruncation) {
  EXPECT_THROW((void)build_model(-0.1, 32), ParameterError);
  EXPECT_THROW((void)build_model(0.1, 7), ParameterError);
  EXPECT_NO_THROW((void)build_model(0.1, 8));
}

TEST(BuildModel, EigenvectorsOrthonormalAndSpectrumAscending) {
  for (const double lambda : {0.01, 0.3, 2.0}) {
    const auto model = build_model(lambda, 48);
    const Eigen::MatrixXd gram = model.eigenvectors().transpose() * model.eigenvectors();
    EXPECT_LE((gram - Eigen::MatrixXd::Identity(48, 48)).cwiseAbs().maxCoeff(), 1e-10);
    for (std::size_t n = 1; n < 48; ++n) EXPECT_GT(model.energy(n), model.energy(n - 1));
  }
}

TEST(BuildModel, QuarticMatrixMatchesLadderOracle) {
  const Eigen::MatrixXd x4 = position_power(12, 4);
  for (std::size_t m = 0; m < 12; ++m)
    for (std::size_t n = 0; n < 12; ++n)
      EXPECT_NEAR(x4(m, n), oracle::x_power_element(m, n, 4), 1e-12) << m << "," << n;
}

TEST(FirstOrder, Examples) {
  EXPECT_DOUBLE_EQ(first_order_energy(0, 0.0), 0.5);
  EXPECT_NEAR(first_order_energy(0, 0.16), 0.53, 1e-15);
  EXPECT_NEAR(first_order_energy(1, 0.16), 1.65, 1e-15);
  // (lambda/4) <n|x^4|n> = (3 lambda/16)(2n^2 + 2n + 1)
  for (std::size_t n = 0; n < 6; ++n) {
    EXPECT_NEAR(first_order_energy(n, 1.0) - (n + 0.5), 0.25 * oracle::x_power_element(n, n, 4), 1e-12);
  }
}

TEST(BuildModel, WeakCouplingTracksPerturbationTheory) {
  // The first-order estimate misses the second-order shift (-21g^2/8 for
  // n = 0, -165g^2/8 for n = 1, g = lambda/4), so compare against the
  // sum-over-states second-order oracle instead.
  const auto model = build_model(0.04, 64);
  EXPECT_NEAR(first_order_energy(0, 0.04), 0.5075, 1e-15);
  EXPECT_NEAR(first_order_energy(1, 0.04), 1.5375, 1e-15);
  EXPECT_NEAR(model.energy(0), 0.5075, 3e-4);
  EXPECT_NEAR(model.energy(1), 1.5375, 2.5e-3);
  for (std::size_t n = 0; n <= 2; ++n) {
    const double second = oracle::second_order_energy(n, 0.04);
    const double correction = second - first_order_energy(n, 0.04);
    // What remains after second order is third order, a small fraction here.
    EXPECT_LT(std::abs(model.energy(n) - second), 0.25 * std::abs(correction)) << "level " << n;
  }
}

TEST(BuildModel, DeviationFromFirstOrderScalesAsLambdaSquared) {
  std::vector<double> c;
  for (const double lambda : {0.01, 0.02, 0.04}) {
    const auto model = build_model(lambda, 64);
    c.push_back(std::abs(model.energy(0) - first_order_energy(0, lambda)) / (lambda * lambda));
  }
  const auto [lo, hi] = std::minmax_element(c.begin(), c.end());
  EXPECT_LE(*hi / *lo, 2.0);
  EXPECT_NEAR(c[0], 21.0 / 128.0, 0.01);
}

TEST(BuildModel, TruncationDoublingConverged) {
  for (const double lambda : {0.0, 0.1, 0.25, 0.5}) {
    const auto coarse = build_model(lambda, 64);
    const auto fine = build_model(lambda, 128);
    for (std::size_t n = 0; n < 5; ++n) {
      EXPECT_LT(std::abs(coarse.energy(n) - fine.energy(n)), 1e-8) << lambda << " " << n;
    }
  }
}

TEST(BuildModel, SpectrumRisesWithLambda) {
  const std::vector<double> lambdas{0.0, 0.05, 0.1, 0.5, 1.0, 3.0};
  for (std::size_t k = 1; k < lambdas.size(); ++k) {
    const auto low = build_model(lambdas[k - 1], 64);
    const auto high = build_model(lambdas[k], 64);
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_GT(high.energy(n), low.energy(n));
  }
}

TEST(BuildModel, EigenfunctionsNarrowWithLambda) {
  const std::vector<double> lambdas{0.0, 0.05, 0.1, 0.5, 1.0, 3.0};
  for (std::size_t k = 1; k < lambdas.size(); ++k) {
    const auto low = build_model(lambdas[k - 1], 64);
    const auto high = build_model(lambdas[k], 64);
    for (std::size_t n = 0; n <= 2; ++n) {
      EXPECT_LT(high.position_variance(n), low.position_variance(n));
    }
  }
  EXPECT_NEAR(build_model(0.0, 32).position_variance(0), 0.5, 1e-12);
  EXPECT_LT(build_model(0.1, 64).position_variance(0), 0.5);
}

TEST(ModeOverlap, HarmonicLimitIsOne) {
  const auto model = build_model(0.0, 32);
  for (std::size_t n = 0; n < 32; ++n) EXPECT_NEAR(mode_overlap(model, n), 1.0, 1e-12);
  EXPECT_THROW((void)mode_overlap(model, 32), ParameterError);
}

TEST(ModeOverlap, WeakAndStrongDistortion) {
  const double weak = mode_overlap(build_model(0.1, 60), 0);
  EXPECT_GT(weak, 0.99);
  EXPECT_LT(weak, 1.0);
  const double strong = mode_overlap(build_model(5.0, 60), 0);
  EXPECT_LT(strong, weak);
}

TEST(ModeOverlap, BoundedAndStrictlyBelowOneForPositiveLambda) {
  for (const double lambda : {0.001, 0.01, 0.1, 1.0, 10.0}) {
    const auto model = build_model(lambda, 64);
    for (std::size_t n = 0; n < 6; ++n) {
      const double s = mode_overlap(model, n);
      EXPECT_GT(s, 0.0);
      EXPECT_LT(s, 1.0 - 1e-12) << lambda << " " << n;
    }
  }
}

TEST(ModeMapping, ValidRecordAndRoundTrip) {
  const auto mapping = map_modes_to_eigenfunctions({{"1", 1}, {"2", 2}});
  EXPECT_EQ(mapping.level_of("1"), 1u);
  EXPECT_EQ(mapping.photon_at(2), "2");
  EXPECT_EQ(mapping.invert_back(), mapping.assignment());
  const ModeMapping defaults;
  EXPECT_EQ(defaults.assignment(), mapping.assignment());
}

TEST(ModeMapping, DuplicateLevelIsRejected) {
  EXPECT_THROW((void)map_modes_to_eigenfunctions({{"1", 3}, {"2", 3}}), ParameterError);
  EXPECT_THROW((void)ModeMapping().photon_at(7), LabelError);
}

TEST(AdiabaticCheck, Examples) {
  const auto ok = adiabatic_check({.delta_e = 1, .h_tilde = 0.01, .t_meas = 1000, .ratio_threshold = 10});
  EXPECT_TRUE(ok.pass);
  EXPECT_NEAR(ok.gap_ratio, 100.0, 1e-12);
  EXPECT_NEAR(ok.measurement_ratio, 10.0, 1e-12);

  const auto strong = adiabatic_check({.delta_e = 1, .h_tilde = 0.5, .t_meas = 1000, .ratio_threshold = 10});
  EXPECT_FALSE(strong.pass);
  EXPECT_NEAR(strong.gap_ratio, 2.0, 1e-12);

  const auto fast = adiabatic_check({.delta_e = 1, .h_tilde = 0.01, .t_meas = 50, .ratio_threshold = 10});
  EXPECT_FALSE(fast.pass);
  EXPECT_NEAR(fast.measurement_ratio, 0.5, 1e-12);
}

TEST(AdiabaticCheck, RejectsNonPositiveInputs) {
  EXPECT_THROW((void)adiabatic_check({.delta_e = 0, .h_tilde = 0.01, .t_meas = 10}), ParameterError);
  EXPECT_THROW((void)adiabatic_check({.delta_e = 1, .h_tilde = -1, .t_meas = 10}), ParameterError);
  EXPECT_THROW((void)adiabatic_check({.delta_e = 1, .h_tilde = 0.1, .t_meas = 0}), ParameterError);
}

}  // namespace
}  // namespace modeconv::oscillator
