#include "modeconv/polarization.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "modeconv/fock.hpp"

namespace modeconv::polarization {

namespace {

BasisLabel pair_basis() { return BasisLabel({kPhotonA, kPhotonB}, {2, 2}); }

}  // namespace

PureState epr_state() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {pair_basis(), {r, 0.0, 0.0, r}};
}

AnalyzerBasis analyzer_basis(double theta, const char* factor) {
  const BasisLabel basis({factor}, {2});
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {PureState(basis, {c, s}), PureState(basis, {-s, c})};
}

Eigen::MatrixXcd analyzer_projection(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::MatrixXcd u(2, 2);
  u << c, s, -s, c;
  return u;
}

PureState transformed_epr_state(const AnalyzerSettings& settings) {
  const double c = std::cos(settings.relative()) / std::numbers::sqrt2;
  const double s = std::sin(settings.relative()) / std::numbers::sqrt2;
  return {pair_basis(), {c, s, -s, c}};
}

PureState rotate_to_analyzer_frame(const PureState& epr, const AnalyzerSettings& settings) {
  const PureState at_a = apply_local(epr, kPhotonA, analyzer_projection(settings.theta_a));
  return apply_local(at_a, kPhotonB, analyzer_projection(settings.theta_b));
}

DetectionProbabilities detection_probabilities(const AnalyzerSettings& settings) {
  const PureState state = transformed_epr_state(settings);
  const ReducedDensityMatrix rho_a = partial_trace(state, kPhotonA);
  const ReducedDensityMatrix rho_b = partial_trace(state, kPhotonB);
  DetectionProbabilities p;
  p.a_plus = rho_a.entries()(0, 0).real();
  p.a_minus = rho_a.entries()(1, 1).real();
  p.b_plus = rho_b.entries()(0, 0).real();
  p.b_minus = rho_b.entries()(1, 1).real();
  p.pp = std::norm(state.amplitude(0));
  p.pm = std::norm(state.amplitude(1));
  p.mp = std::norm(state.amplitude(2));
  p.mm = std::norm(state.amplitude(3));
  return p;
}

double correlation(const AnalyzerSettings& settings) {
  const auto p = detection_probabilities(settings);
  return p.pp + p.mm - p.pm - p.mp;
}

ChshAngles chsh_geometry(const ChshSettings& settings) {
  const double t = settings.theta;
  return {.a = 0.0, .a_prime = 2.0 * t, .b = t, .b_prime = 3.0 * t};
}

double chsh_sum(const ChshAngles& angles) {
  return correlation({angles.a, angles.b}) - correlation({angles.a, angles.b_prime}) +
         correlation({angles.a_prime, angles.b}) + correlation({angles.a_prime, angles.b_prime});
}

double chsh_sum(const ChshSettings& settings) { return chsh_sum(chsh_geometry(settings)); }

ScanResult chsh_scan(double theta_min, double theta_max, std::size_t steps) {
  ScanResult scan("theta", {"S", "entropy"});
  for (const double theta : linspace(theta_min, theta_max, steps)) {
    const double entropy = entanglement_entropy(transformed_epr_state({theta, 0.0}), kPhotonA);
    scan.add_row({theta, chsh_sum(ChshSettings{theta}), entropy});
  }
  return scan;
}

PureState rotated_two_photon_state(double phi) {
  const PureState one_one = two_mode_fock_state("mode_a", "mode_b", 2, {{1, 1, 1.0}});
  return rotate_modes(one_one, phi);
}

ScanResult mode_rotation_entropy_scan(double phi_min, double phi_max, std::size_t steps) {
  ScanResult scan("phi", {"entropy_vn", "entropy_renyi2"});
  for (const double phi : linspace(phi_min, phi_max, steps)) {
    const ReducedDensityMatrix rho = partial_trace(rotated_two_photon_state(phi), "mode_a");
    scan.add_row({phi, von_neumann_entropy(rho), renyi_entropy(rho, 2.0)});
  }
  return scan;
}

}  // namespace modeconv::polarization
