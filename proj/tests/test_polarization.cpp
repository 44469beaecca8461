#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "modeconv/errors.hpp"
#include "modeconv/polarization.hpp"
#include "oracles.hpp"

namespace modeconv::polarization {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752;
const double kTsirelson = 2.0 * std::numbers::sqrt2;

// Closed forms used as oracles.
double chsh_closed_form(double t) { return 3.0 * std::cos(2 * t) - std::cos(6 * t); }

void expect_amplitudes(const PureState& s, const std::vector<Complex>& expected, double tol) {
  ASSERT_EQ(s.dim(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(std::abs(s.amplitude(i) - expected[i]), 0.0, tol) << "index " << i;
  }
}

TEST(EprState, AmplitudesAndEntropy) {
  const auto epr = epr_state();
  expect_amplitudes(epr, {kInvSqrt2, 0, 0, kInvSqrt2}, 1e-15);
  EXPECT_NEAR(entanglement_entropy(epr, kPhotonA), 1.0, 1e-12);
  EXPECT_NEAR(entanglement_entropy(epr, kPhotonB), 1.0, 1e-12);
  const std::array<std::size_t, 2> hh{0, 0};
  EXPECT_NEAR(fidelity(epr, PureState::basis_state(epr.basis(), hh)), 0.5, 1e-15);
}

TEST(AnalyzerBasis, IdentityAndQuarterTurn) {
  const auto at_zero = analyzer_basis(0.0);
  expect_amplitudes(at_zero.plus, {1, 0}, 0);
  expect_amplitudes(at_zero.minus, {0, 1}, 0);
  const auto at_quarter = analyzer_basis(kPi / 2);
  expect_amplitudes(at_quarter.plus, {0, 1}, 1e-16);
  expect_amplitudes(at_quarter.minus, {-1, 0}, 1e-16);
}

TEST(AnalyzerBasis, AlwaysOrthonormal) {
  oracle::Gen gen(29);
  for (int i = 0; i < 100; ++i) {
    const auto b = analyzer_basis(gen.angle());
    EXPECT_NEAR(fidelity(b.plus, b.minus), 0.0, 1e-30);
    EXPECT_NEAR(b.plus.norm(), 1.0, 1e-15);
    EXPECT_NEAR(b.minus.norm(), 1.0, 1e-15);
  }
}

TEST(TransformedState, ParallelAnalyzers) {
  expect_amplitudes(transformed_epr_state({0.4, 0.4}), {kInvSqrt2, 0, 0, kInvSqrt2}, 1e-15);
}

TEST(TransformedState, PerpendicularAnalyzers) {
  expect_amplitudes(transformed_epr_state({kPi / 2, 0.0}), {0, kInvSqrt2, -kInvSqrt2, 0}, 1e-15);
}

TEST(TransformedState, ConstructionPathsAgree) {
  oracle::Gen gen(31);
  for (int i = 0; i < 100; ++i) {
    const AnalyzerSettings s{gen.angle(), gen.angle()};
    const auto closed = transformed_epr_state(s);
    const auto rotated = rotate_to_analyzer_frame(epr_state(), s);
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::abs(closed.amplitude(k) - rotated.amplitude(k)), 0.0, 1e-12);
    }
    EXPECT_NEAR(entanglement_entropy(closed, kPhotonA), 1.0, 1e-10);
  }
}

TEST(DetectionProbabilities, Examples) {
  const auto at0 = detection_probabilities({0.0, 0.0});
  EXPECT_NEAR(at0.pp, 0.5, 1e-15);
  EXPECT_NEAR(at0.pm, 0.0, 1e-15);
  const auto at45 = detection_probabilities({kPi / 4, 0.0});
  for (const double p : {at45.pp, at45.pm, at45.mp, at45.mm}) EXPECT_NEAR(p, 0.25, 1e-15);
  const auto at90 = detection_probabilities({kPi / 2, 0.0});
  EXPECT_NEAR(at90.pp, 0.0, 1e-15);
  EXPECT_NEAR(at90.pm, 0.5, 1e-15);
}

TEST(DetectionProbabilities, ClosureAndMarginals) {
  oracle::Gen gen(37);
  for (int i = 0; i < 200; ++i) {
    const AnalyzerSettings s{gen.angle(), gen.angle()};
    const auto p = detection_probabilities(s);
    const double t = s.relative();
    EXPECT_NEAR(p.pp + p.pm + p.mp + p.mm, 1.0, 1e-12);
    EXPECT_NEAR(p.pp, 0.5 * std::cos(t) * std::cos(t), 1e-12);
    EXPECT_NEAR(p.mm, 0.5 * std::cos(t) * std::cos(t), 1e-12);
    EXPECT_NEAR(p.pm, 0.5 * std::sin(t) * std::sin(t), 1e-12);
    EXPECT_NEAR(p.mp, 0.5 * std::sin(t) * std::sin(t), 1e-12);
    for (const double single : {p.a_plus, p.a_minus, p.b_plus, p.b_minus}) {
      EXPECT_NEAR(single, 0.5, 1e-12);
    }
    EXPECT_NEAR(p.a_plus, p.pp + p.pm, 1e-12);
    EXPECT_NEAR(p.b_plus, p.pp + p.mp, 1e-12);
  }
}

TEST(Correlation, Examples) {
  EXPECT_NEAR(correlation({0.0, 0.0}), 1.0, 1e-15);
  EXPECT_NEAR(correlation({kPi / 4, 0.0}), 0.0, 1e-15);
  EXPECT_NEAR(correlation({kPi / 2, 0.0}), -1.0, 1e-15);
}

TEST(Correlation, MatchesCosTwoTheta) {
  oracle::Gen gen(41);
  for (int i = 0; i < 200; ++i) {
    const AnalyzerSettings s{gen.angle(), gen.angle()};
    EXPECT_NEAR(correlation(s), std::cos(2 * s.relative()), 1e-12);
  }
}

TEST(ChshSum, Examples) {
  EXPECT_NEAR(chsh_sum(ChshSettings{0.0}), 2.0, 1e-15);
  EXPECT_NEAR(chsh_sum(ChshSettings{kPi / 8}), kTsirelson, 1e-12);
  EXPECT_NEAR(chsh_sum(ChshSettings{kPi / 8}), 2.8284271, 1e-7);
  EXPECT_NEAR(chsh_sum(ChshSettings{kPi / 4}), 0.0, 1e-12);
}

TEST(ChshSum, GeometrySpacing) {
  const auto g = chsh_geometry({0.3});
  EXPECT_NEAR(g.b - g.a, 0.3, 1e-15);
  EXPECT_NEAR(g.a_prime - g.b, 0.3, 1e-15);
  EXPECT_NEAR(g.b_prime - g.a_prime, 0.3, 1e-15);
  EXPECT_NEAR(g.b_prime - g.a, 0.9, 1e-15);
}

TEST(ChshSum, MatchesClosedFormOnRandomAngles) {
  oracle::Gen gen(43);
  for (int i = 0; i < 200; ++i) {
    const double t = gen.angle();
    EXPECT_NEAR(chsh_sum(ChshSettings{t}), chsh_closed_form(t), 1e-12);
  }
}

TEST(ChshSum, FourAngleVariantReducesToGeometry) {
  const double t = 0.2;
  EXPECT_NEAR(chsh_sum(ChshAngles{.a = 0, .a_prime = 2 * t, .b = t, .b_prime = 3 * t}),
              chsh_sum(ChshSettings{t}), 1e-15);
  // Shifting all four axes by a common angle changes nothing.
  EXPECT_NEAR(chsh_sum(ChshAngles{.a = 1, .a_prime = 1 + 2 * t, .b = 1 + t, .b_prime = 1 + 3 * t}),
              chsh_sum(ChshSettings{t}), 1e-12);
}

TEST(ChshScan, FivePointScan) {
  const auto scan = chsh_scan(0.0, kPi / 2, 5);
  const std::vector<double> expected{2.0, kTsirelson, 0.0, -kTsirelson, -2.0};
  const auto s = scan.column("S");
  ASSERT_EQ(s.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(s[i], expected[i], 1e-12);
  for (const double e : scan.column("entropy")) EXPECT_NEAR(e, 1.0, 1e-10);
  EXPECT_EQ(scan.columns(), (std::vector<std::string>{"theta", "S", "entropy"}));
}

TEST(ChshScan, BoundedByTsirelsonWithViolations) {
  const auto scan = chsh_scan(0.0, kPi, 2001);
  int violations = 0;
  double best = 0.0;
  double best_theta = 0.0;
  for (const auto& row : scan.rows()) {
    EXPECT_LE(std::abs(row[1]), kTsirelson + 1e-12);
    if (std::abs(row[1]) > 2.0) ++violations;
    if (std::abs(row[1]) > best) {
      best = std::abs(row[1]);
      best_theta = row[0];
    }
  }
  EXPECT_GT(violations, 0);
  EXPECT_NEAR(best, kTsirelson, 1e-5);
  const double step = kPi / 2000;
  const bool near_optimum = std::abs(best_theta - kPi / 8) <= step ||
                            std::abs(best_theta - 3 * kPi / 8) <= step ||
                            std::abs(best_theta - 5 * kPi / 8) <= step ||
                            std::abs(best_theta - 7 * kPi / 8) <= step;
  EXPECT_TRUE(near_optimum) << best_theta;
}

TEST(ChshScan, RejectsTooFewSteps) {
  EXPECT_THROW((void)chsh_scan(0.0, 1.0, 1), ParameterError);
  EXPECT_THROW((void)mode_rotation_entropy_scan(0.0, 1.0, 0), ParameterError);
}

TEST(ModeRotation, EntropyAtKeyAngles) {
  const auto scan = mode_rotation_entropy_scan(0.0, kPi / 4, 3);
  const auto vn = scan.column("entropy_vn");
  EXPECT_NEAR(vn[0], 0.0, 1e-10);
  EXPECT_NEAR(vn[1], 1.5, 1e-10);  // phi = pi/8, spectrum (1/2, 1/4, 1/4)
  EXPECT_NEAR(vn[2], 1.0, 1e-10);
}

TEST(ModeRotation, PiOverEightSpectrum) {
  const auto rho = partial_trace(rotated_two_photon_state(kPi / 8), "mode_a");
  const auto& ev = rho.eigenvalues();
  std::vector<double> sorted(ev.data(), ev.data() + ev.size());
  std::sort(sorted.begin(), sorted.end());
  EXPECT_NEAR(sorted[0], 0.25, 1e-12);
  EXPECT_NEAR(sorted[1], 0.25, 1e-12);
  EXPECT_NEAR(sorted[2], 0.5, 1e-12);
}

TEST(ModeRotation, RenyiSharesZerosAndMaxima) {
  // Both entropies depend on phi only through sin^2(2 phi) and peak where the
  // spectrum is flat, sin^2(2 phi) = 2/3. On [0, pi/4] that map is monotone.
  const auto scan = mode_rotation_entropy_scan(0.0, kPi / 4, 201);
  const auto phi = scan.column("phi");
  const auto vn = scan.column("entropy_vn");
  const auto r2 = scan.column("entropy_renyi2");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    EXPECT_EQ(vn[i] < 1e-10, r2[i] < 1e-10) << phi[i];
    EXPECT_LE(r2[i], vn[i] + 1e-12);
  }
  const auto argmax = [](const std::vector<double>& v) {
    return std::max_element(v.begin(), v.end()) - v.begin();
  };
  EXPECT_LE(std::abs(argmax(vn) - argmax(r2)), 1);
  const double peak = 0.5 * std::asin(std::sqrt(2.0 / 3.0));
  EXPECT_NEAR(phi[argmax(vn)], peak, kPi / 400);
  EXPECT_NEAR(vn[argmax(vn)], std::log2(3.0), 1e-4);
}

}  // namespace
}  // namespace modeconv::polarization
