#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modeconv/oscillator.hpp"
#include "modeconv/state.hpp"

namespace modeconv::protocol {

inline constexpr const char* kModeA = "mode_a";
inline constexpr const char* kModeB = "mode_b";
inline constexpr const char* kParticle1 = "particle_1";
inline constexpr const char* kParticle2 = "particle_2";

/// Double-slit ancilla photon and its photodetection.
struct AncillaConfig {
  Complex alpha{0.70710678118654752};  // top-slit amplitude
  Complex beta{0.70710678118654752};   // bottom-slit amplitude
  Complex detect_amp{0.70710678118654752};
  double eta = 0.9;

  void validate() const;
};

/// Everything a conversion trial needs.
///
/// `landing_probability` is the chance that the ancilla lands on the upper,
/// triggering half of the screen; it does not depend on alpha and beta.
struct ConversionConfig {
  double lambda_on = 0.02;
  std::size_t truncation = oscillator::OscillatorModel::kDefaultTruncation;
  std::map<std::string, std::size_t> assignment{{"1", 1}, {"2", 2}};
  AncillaConfig ancilla;
  double landing_probability = 0.5;
  bool abort_gate = true;

  double clock_period = 10.0;
  double travel_plus_register_time = 4.0;
  double and_gate_time = 1.0;

  double t_meas = 1.0e4;
  double ratio_threshold = 10.0;

  void validate() const;
};

struct BranchAmplitudes {
  Complex gamma;  // no detection, harmonic branch
  Complex delta;  // detection, anharmonic branch
};

struct ConversionOutcome {
  std::uint64_t trial_id = 0;
  bool photon_detected = false;  // ancilla reached the triggering half
  bool registered = false;       // ... and produced a photo-electron there
  bool aborted = false;
  std::optional<PureState> delivered_state;
  std::optional<double> particle_entropy;
  std::optional<double> fidelity_to_target;
};

struct CampaignStatistics {
  std::uint64_t n_trials = 0;
  std::uint64_t delivered = 0;
  std::uint64_t aborted = 0;
  double delivered_rate = 0.0;
  double abort_rate = 0.0;
  std::optional<double> mean_entropy;
  std::optional<double> min_fidelity;
  std::optional<double> mean_fidelity;
};

struct CampaignResult {
  CampaignStatistics statistics;
  std::vector<ConversionOutcome> outcomes;
};

/// (|2,0> + |1,1> + |0,2>)/sqrt(3) on mode_a x mode_b, occupations 0..2.
[[nodiscard]] PureState initial_mode_state();

/// Projects a two-mode state onto |1,1> and relabels it as the particle
/// product |a>_1 |b>_2, written in the same two-level particle frame that
/// assemble_final_state uses (index 0 of each particle).
/// Throws PreconditionError when the |1,1> amplitude vanishes.
[[nodiscard]] PureState select_middle_term(const PureState& state);

/// delta = detect_amp, gamma = sqrt(1 - |detect_amp|^2).
[[nodiscard]] BranchAmplitudes ancilla_branch_amplitudes(const AncillaConfig& config);

/// gamma |a>|b> + delta |a'>|b'> in a per-particle orthonormal frame
/// {|a>, |a_perp>} where |a'> = s_a |a> + sqrt(1 - s_a^2) |a_perp>.
/// The result is normalized with the Gram norm
/// |gamma|^2 + |delta|^2 + 2 Re(conj(gamma) delta) s_a s_b.
[[nodiscard]] PureState assemble_final_state(Complex gamma, Complex delta, double overlap_a,
                                             double overlap_b);

/// Overlaps taken from the model at the levels bound to photons "1" and "2".
[[nodiscard]] PureState assemble_final_state(Complex gamma, Complex delta,
                                             const oscillator::OscillatorModel& model,
                                             const oscillator::ModeMapping& mapping);

/// Von Neumann entropy of particle_1.
[[nodiscard]] double particle_entanglement_entropy(const PureState& state);

/// Budget for the configured ramp: the gap between the two mapped levels at
/// lambda_on and the larger first-order level shift as perturbation strength.
[[nodiscard]] oscillator::AdiabaticBudget adiabatic_budget(
    const ConversionConfig& config, const oscillator::OscillatorModel& model,
    const oscillator::ModeMapping& mapping);

/// Precomputes the oscillator model and target state once, then runs
/// independent trials. Each trial draws from its own generator seeded by
/// (campaign seed, trial id), so trial order does not affect results.
class ConversionEngine {
 public:
  /// Validates the config and, for lambda_on > 0, the adiabatic budget
  /// (PreconditionError when it fails).
  explicit ConversionEngine(ConversionConfig config);

  [[nodiscard]] ConversionOutcome run_trial(std::uint64_t trial_id, std::uint64_t seed) const;

  [[nodiscard]] const ConversionConfig& config() const { return config_; }
  [[nodiscard]] const PureState& target_state() const { return target_; }
  [[nodiscard]] const PureState& unconverted_state() const { return unconverted_; }
  [[nodiscard]] const oscillator::OscillatorModel& model() const { return model_; }

 private:
  ConversionConfig config_;
  oscillator::OscillatorModel model_;
  PureState target_;
  PureState unconverted_;
  double target_entropy_ = 0.0;
};

[[nodiscard]] ConversionOutcome run_trial(const ConversionConfig& config, std::uint64_t seed);

/// Trials 0..n_trials-1 in order. Requires n_trials >= 1.
[[nodiscard]] CampaignResult run_campaign(const ConversionConfig& config, std::uint64_t n_trials,
                                          std::uint64_t seed);

[[nodiscard]] nlohmann::json to_json(const ConversionOutcome& outcome);
[[nodiscard]] nlohmann::json to_json(const CampaignStatistics& statistics);

}  // namespace modeconv::protocol
