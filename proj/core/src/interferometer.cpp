#include "modeconv/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "modeconv/errors.hpp"

namespace modeconv::interferometer {

void MomentumLabels::validate() const {
  const std::set<std::string> unique(outputs.begin(), outputs.end());
  if (unique.size() != outputs.size()) {
    throw LabelError("interferometer output labels must be distinct");
  }
  if (p == p_prime) throw LabelError("momentum labels p and p' must differ");
}

PureState interferometer_input() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {BasisLabel({kAtom1, kAtom2}, {2, 2}), {r, 0.0, 0.0, r}};
}

PureState bragg_output(const BraggPhases& phases) {
  using namespace std::complex_literals;
  const double delta = phases.delta();
  const Complex forward = std::exp(1i * delta);
  const Complex backward = std::exp(-1i * delta);
  const double scale = 1.0 / (2.0 * std::numbers::sqrt2);
  return {BasisLabel({kStationA, kStationB}, {2, 2}),
          {scale * (-1i) * std::exp(1i * phases.phi_b) * (forward + 1.0),
           scale * (forward - 1.0),
           scale * (backward - 1.0),
           scale * (-1i) * std::exp(-1i * phases.phi_b) * (backward + 1.0)}};
}

JointProbabilities joint_probabilities(const BraggPhases& phases) {
  const PureState out = bragg_output(phases);
  return {std::norm(out.amplitude(0)), std::norm(out.amplitude(1)),
          std::norm(out.amplitude(2)), std::norm(out.amplitude(3))};
}

double momentum_correlation(const BraggPhases& phases) {
  const auto p = joint_probabilities(phases);
  return p.pp + p.mm - p.pm - p.mp;
}

ScanResult momentum_chsh_scan(double vartheta_min, double vartheta_max, std::size_t steps) {
  ScanResult scan("vartheta", {"S", "entropy_in", "entropy_out"});
  const double entropy_in = entanglement_entropy(interferometer_input(), kAtom1);
  for (const double v : linspace(vartheta_min, vartheta_max, steps)) {
    const double a = 0.0;
    const double b = 2.0 * v;
    const double a_prime = 4.0 * v;
    const double b_prime = 6.0 * v;
    const double s = momentum_correlation({a, b}) - momentum_correlation({a, b_prime}) +
                     momentum_correlation({a_prime, b}) + momentum_correlation({a_prime, b_prime});
    const double entropy_out = entanglement_entropy(bragg_output({b, a}), kStationA);
    scan.add_row({v, s, entropy_in, entropy_out});
  }
  return scan;
}

}  // namespace modeconv::interferometer
