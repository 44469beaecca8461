#include "modeconv/protocol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "modeconv/errors.hpp"
#include "modeconv/fock.hpp"

namespace modeconv::protocol {

namespace {

constexpr double kNormTolerance = 1e-12;

BasisLabel particle_frame() { return BasisLabel({kParticle1, kParticle2}, {2, 2}); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void AncillaConfig::validate() const {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kNormTolerance) {
    throw ParameterError("ancilla: |alpha|^2 + |beta|^2 must equal 1");
  }
  if (!(std::abs(detect_amp) <= 1.0)) {
    throw ParameterError("ancilla: |detect_amp| must not exceed 1");
  }
  if (!(eta >= 0.0 && eta <= 1.0)) throw ParameterError("ancilla: eta must lie in [0, 1]");
}

void ConversionConfig::validate() const {
  ancilla.validate();
  if (!std::isfinite(lambda_on) || lambda_on < 0.0) {
    throw ParameterError("lambda_on must be >= 0");
  }
  if (!(landing_probability >= 0.0 && landing_probability <= 1.0)) {
    throw ParameterError("landing_probability must lie in [0, 1]");
  }
  if (!(travel_plus_register_time >= 0.0) || !(and_gate_time >= 0.0)) {
    throw ParameterError("latencies must be non-negative");
  }
  if (!(clock_period > travel_plus_register_time + and_gate_time)) {
    throw ParameterError(
        "clock_period must exceed travel_plus_register_time + and_gate_time");
  }
  const oscillator::ModeMapping mapping(assignment);
  for (const char* photon : {"1", "2"}) {
    if (mapping.level_of(photon) >= truncation) {
      throw ParameterError("mode assignment level beyond oscillator truncation");
    }
  }
}

PureState initial_mode_state() {
  const double r = 1.0 / std::sqrt(3.0);
  return two_mode_fock_state(kModeA, kModeB, 2, {{2, 0, r}, {1, 1, r}, {0, 2, r}});
}

PureState select_middle_term(const PureState& state) {
  const auto& basis = state.basis();
  const std::array<std::size_t, 2> one_one{1, 1};
  if (basis.factor_count() != 2 || basis.dims()[0] < 2 || basis.dims()[1] < 2) {
    throw ParameterError("select_middle_term: expected a two-mode occupation state");
  }
  const Complex amp = state.amplitude(basis.flat_index(one_one));
  if (std::abs(amp) <= std::numeric_limits<double>::min()) {
    throw PreconditionError("select_middle_term: state has no |1,1> component");
  }
  return {particle_frame(), {amp / std::abs(amp), 0.0, 0.0, 0.0}};
}

BranchAmplitudes ancilla_branch_amplitudes(const AncillaConfig& config) {
  if (!(std::abs(config.detect_amp) <= 1.0)) {
    throw ParameterError("ancilla: |detect_amp| must not exceed 1");
  }
  const double untriggered = std::sqrt(std::max(0.0, 1.0 - std::norm(config.detect_amp)));
  return {untriggered, config.detect_amp};
}

PureState assemble_final_state(Complex gamma, Complex delta, double overlap_a,
                               double overlap_b) {
  for (const double s : {overlap_a, overlap_b}) {
    if (!(s >= 0.0 && s <= 1.0 + kNormTolerance)) {
      throw ParameterError("mode overlaps must lie in [0, 1]");
    }
  }
  const double s_a = std::min(overlap_a, 1.0);
  const double s_b = std::min(overlap_b, 1.0);
  const std::array<double, 2> a_prime{s_a, std::sqrt(1.0 - s_a * s_a)};
  const std::array<double, 2> b_prime{s_b, std::sqrt(1.0 - s_b * s_b)};

  const double norm2 = std::norm(gamma) + std::norm(delta) +
                       2.0 * (std::conj(gamma) * delta).real() * s_a * s_b;
  if (!(norm2 > kNormTolerance)) {
    throw PreconditionError("final state has zero norm (degenerate Gram matrix)");
  }
  const double scale = 1.0 / std::sqrt(norm2);

  std::vector<Complex> amps(4);
  amps[0] = gamma;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) amps[2 * i + j] += delta * a_prime[i] * b_prime[j];
  }
  for (auto& a : amps) a *= scale;
  return {particle_frame(), std::move(amps)};
}

PureState assemble_final_state(Complex gamma, Complex delta,
                               const oscillator::OscillatorModel& model,
                               const oscillator::ModeMapping& mapping) {
  return assemble_final_state(gamma, delta,
                              oscillator::mode_overlap(model, mapping.level_of("1")),
                              oscillator::mode_overlap(model, mapping.level_of("2")));
}

double particle_entanglement_entropy(const PureState& state) {
  return entanglement_entropy(state, kParticle1);
}

oscillator::AdiabaticBudget adiabatic_budget(const ConversionConfig& config,
                                             const oscillator::OscillatorModel& model,
                                             const oscillator::ModeMapping& mapping) {
  const std::size_t level_a = mapping.level_of("1");
  const std::size_t level_b = mapping.level_of("2");
  const auto shift = [&](std::size_t n) {
    return oscillator::first_order_energy(n, config.lambda_on) -
           oscillator::first_order_energy(n, 0.0);
  };
  return {.delta_e = std::abs(model.energy(level_b) - model.energy(level_a)),
          .h_tilde = std::max(shift(level_a), shift(level_b)),
          .t_meas = config.t_meas,
          .ratio_threshold = config.ratio_threshold};
}

ConversionEngine::ConversionEngine(ConversionConfig config)
    : config_((config.validate(), std::move(config))),
      model_(oscillator::build_model(config_.lambda_on, config_.truncation)),
      target_(particle_frame(), std::vector<Complex>(4)),
      unconverted_(particle_frame(), {1.0, 0.0, 0.0, 0.0}) {
  const oscillator::ModeMapping mapping(config_.assignment);
  if (config_.lambda_on > 0.0) {
    const auto verdict = oscillator::adiabatic_check(adiabatic_budget(config_, model_, mapping));
    if (!verdict.pass) {
      throw PreconditionError("adiabatic budget fails: dE/H = " +
                              std::to_string(verdict.gap_ratio) + ", t_meas*H = " +
                              std::to_string(verdict.measurement_ratio) + ", threshold " +
                              std::to_string(config_.ratio_threshold));
    }
  }
  const auto branches = ancilla_branch_amplitudes(config_.ancilla);
  target_ = assemble_final_state(branches.gamma, branches.delta, model_, mapping);
  target_entropy_ = particle_entanglement_entropy(target_);
}

ConversionOutcome ConversionEngine::run_trial(std::uint64_t trial_id, std::uint64_t seed) const {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trial_id)));
  const double landing_draw = uniform01(rng);
  const double register_draw = uniform01(rng);

  ConversionOutcome out;
  out.trial_id = trial_id;
  out.photon_detected = landing_draw < config_.landing_probability;
  // The full screen registers any landing photon with probability eta; the
  // AND of that channel with the clock tick is the loss witness.
  const bool screen_registered = register_draw < config_.ancilla.eta;
  out.registered = out.photon_detected && screen_registered;

  const PureState* delivered = nullptr;
  if (config_.abort_gate) {
    out.aborted = !screen_registered;
    if (out.registered) delivered = &target_;
  } else if (out.photon_detected) {
    delivered = out.registered ? &target_ : &unconverted_;
  }

  if (delivered != nullptr) {
    out.delivered_state = *delivered;
    out.particle_entropy =
        delivered == &target_ ? target_entropy_ : particle_entanglement_entropy(*delivered);
    out.fidelity_to_target = fidelity(target_, *delivered);
  }
  return out;
}

ConversionOutcome run_trial(const ConversionConfig& config, std::uint64_t seed) {
  return ConversionEngine(config).run_trial(0, seed);
}

CampaignResult run_campaign(const ConversionConfig& config, std::uint64_t n_trials,
                            std::uint64_t seed) {
  if (n_trials < 1) throw ParameterError("campaign needs at least one trial");
  const ConversionEngine engine(config);

  CampaignResult result;
  result.outcomes.reserve(n_trials);
  auto& stats = result.statistics;
  stats.n_trials = n_trials;
  double entropy_sum = 0.0;
  double fidelity_sum = 0.0;
  double fidelity_min = std::numeric_limits<double>::infinity();
  for (std::uint64_t id = 0; id < n_trials; ++id) {
    auto outcome = engine.run_trial(id, seed);
    if (outcome.aborted) ++stats.aborted;
    if (outcome.delivered_state) {
      ++stats.delivered;
      entropy_sum += *outcome.particle_entropy;
      fidelity_sum += *outcome.fidelity_to_target;
      fidelity_min = std::min(fidelity_min, *outcome.fidelity_to_target);
    }
    result.outcomes.push_back(std::move(outcome));
  }
  const auto n = static_cast<double>(n_trials);
  stats.delivered_rate = static_cast<double>(stats.delivered) / n;
  stats.abort_rate = static_cast<double>(stats.aborted) / n;
  if (stats.delivered > 0) {
    const auto d = static_cast<double>(stats.delivered);
    stats.mean_entropy = entropy_sum / d;
    stats.mean_fidelity = fidelity_sum / d;
    stats.min_fidelity = fidelity_min;
  }
  return result;
}

nlohmann::json to_json(const ConversionOutcome& outcome) {
  nlohmann::json j;
  j["trial_id"] = outcome.trial_id;
  j["photon_detected"] = outcome.photon_detected;
  j["registered"] = outcome.registered;
  j["aborted"] = outcome.aborted;
  if (outcome.delivered_state) {
    const auto& state = *outcome.delivered_state;
    nlohmann::json amps = nlohmann::json::array();
    for (const auto& a : state.amplitudes()) amps.push_back({a.real(), a.imag()});
    j["delivered_state"] = {{"factors", state.basis().names()},
                            {"dims", state.basis().dims()},
                            {"amplitudes", std::move(amps)}};
  } else {
    j["delivered_state"] = nullptr;
  }
  const auto optional_number = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  j["particle_entropy"] = optional_number(outcome.particle_entropy);
  j["fidelity_to_target"] = optional_number(outcome.fidelity_to_target);
  return j;
}

nlohmann::json to_json(const CampaignStatistics& statistics) {
  const auto optional_number = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["n_trials"] = statistics.n_trials;
  j["delivered"] = statistics.delivered;
  j["aborted"] = statistics.aborted;
  j["delivered_rate"] = statistics.delivered_rate;
  j["abort_rate"] = statistics.abort_rate;
  j["mean_entropy"] = optional_number(statistics.mean_entropy);
  j["min_fidelity"] = optional_number(statistics.min_fidelity);
  j["mean_fidelity"] = optional_number(statistics.mean_fidelity);
  return j;
}

}  // namespace modeconv::protocol
