#pragma once

#include <array>
#include <string>

#include "modeconv/scan.hpp"
#include "modeconv/state.hpp"

namespace modeconv::interferometer {

inline constexpr const char* kAtom1 = "atom_1";
inline constexpr const char* kAtom2 = "atom_2";
inline constexpr const char* kStationA = "station_A";
inline constexpr const char* kStationB = "station_B";

/// Laser phase differences of the two Bragg splitters, radians.
struct BraggPhases {
  double phi_a = 0.0;
  double phi_b = 0.0;

  [[nodiscard]] double delta() const { return phi_a - phi_b; }
};

/// Opaque mode labels; momenta carry no kinematics.
struct MomentumLabels {
  std::string p = "p";
  std::string p_prime = "p'";
  std::array<std::string, 4> outputs{"A+", "A-", "B+", "B-"};

  /// Throws LabelError unless the four output labels are distinct.
  void validate() const;
};

/// P(A+B+), P(A+B-), P(A-B+), P(A-B-).
struct JointProbabilities {
  double pp = 0.0;
  double pm = 0.0;
  double mp = 0.0;
  double mm = 0.0;
};

/// (|p,-p> + |p',-p'>)/sqrt(2): atom_1 in {p, p'}, atom_2 in {-p, -p'}.
[[nodiscard]] PureState interferometer_input();

/// Output state over station_A in {A+, A-} and station_B in {B+, B-}.
[[nodiscard]] PureState bragg_output(const BraggPhases& phases);

/// |amplitude|^2 of bragg_output.
[[nodiscard]] JointProbabilities joint_probabilities(const BraggPhases& phases);

[[nodiscard]] double momentum_correlation(const BraggPhases& phases);

/// Rows (vartheta, S, entropy_in, entropy_out). The four phase settings are
/// 0, 2v, 4v, 6v so that E between neighbouring settings is cos(2v).
[[nodiscard]] ScanResult momentum_chsh_scan(double vartheta_min, double vartheta_max,
                                            std::size_t steps);

}  // namespace modeconv::interferometer
