#pragma once

#include <Eigen/Dense>

#include "modeconv/scan.hpp"
#include "modeconv/state.hpp"

namespace modeconv::polarization {

inline constexpr const char* kPhotonA = "photon_A";
inline constexpr const char* kPhotonB = "photon_B";

/// Linear analyzer orientations at the two stations, radians in the x-y plane.
struct AnalyzerSettings {
  double theta_a = 0.0;
  double theta_b = 0.0;

  [[nodiscard]] double relative() const { return theta_a - theta_b; }
};

/// Common separation angle of the CHSH axes a, b, a', b'.
struct ChshSettings {
  double theta = 0.0;
};

/// Four analyzer axes for a general CHSH evaluation.
struct ChshAngles {
  double a = 0.0;
  double a_prime = 0.0;
  double b = 0.0;
  double b_prime = 0.0;
};

/// Rotated single-photon basis at one station. Index 0 is H, 1 is V.
struct AnalyzerBasis {
  PureState plus;
  PureState minus;
};

struct DetectionProbabilities {
  double a_plus = 0.0;
  double a_minus = 0.0;
  double b_plus = 0.0;
  double b_minus = 0.0;
  double pp = 0.0;
  double pm = 0.0;
  double mp = 0.0;
  double mm = 0.0;
};

/// (|HH> + |VV>)/sqrt(2) on photon_A x photon_B, order HH, HV, VH, VV.
[[nodiscard]] PureState epr_state();

/// |+> = cos t |H> + sin t |V>, |-> = -sin t |H> + cos t |V>.
[[nodiscard]] AnalyzerBasis analyzer_basis(double theta, const char* factor = kPhotonA);

/// Change of basis from (H, V) components to (+, -) components; rows are
/// <+| and <-|.
[[nodiscard]] Eigen::MatrixXcd analyzer_projection(double theta);

/// EPR pair written in the rotated analyzer bases, order ++, +-, -+, --.
/// Built directly from the closed-form expansion in cos/sin of the relative
/// angle.
[[nodiscard]] PureState transformed_epr_state(const AnalyzerSettings& settings);

/// Same state reached by projecting epr_state() factor-wise onto each
/// station's analyzer basis.
[[nodiscard]] PureState rotate_to_analyzer_frame(const PureState& epr,
                                                 const AnalyzerSettings& settings);

[[nodiscard]] DetectionProbabilities detection_probabilities(const AnalyzerSettings& settings);

/// E = P++ + P-- - P+- - P-+ from detection_probabilities.
[[nodiscard]] double correlation(const AnalyzerSettings& settings);

/// Axes a = 0, b = t, a' = 2t, b' = 3t so that adjacent pairs are separated
/// by t and (a, b') by 3t.
[[nodiscard]] ChshAngles chsh_geometry(const ChshSettings& settings);

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b').
[[nodiscard]] double chsh_sum(const ChshAngles& angles);
[[nodiscard]] double chsh_sum(const ChshSettings& settings);

/// Rows (theta, S, entropy) with theta_A = theta, theta_B = 0.
[[nodiscard]] ScanResult chsh_scan(double theta_min, double theta_max, std::size_t steps);

/// |1,1> on modes a, b after a Hilbert-space mode rotation by phi.
[[nodiscard]] PureState rotated_two_photon_state(double phi);

/// Rows (phi, entropy_vn, entropy_renyi2) of the mode bipartition.
[[nodiscard]] ScanResult mode_rotation_entropy_scan(double phi_min, double phi_max,
                                                    std::size_t steps);

}  // namespace modeconv::polarization
