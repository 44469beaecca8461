#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "modeconv/errors.hpp"
#include "modeconv/interferometer.hpp"
#include "modeconv/oscillator.hpp"
#include "modeconv/polarization.hpp"
#include "modeconv/protocol.hpp"
#include "modeconv/scan.hpp"
#include "modeconv/version.hpp"
#include "run_config.hpp"

namespace modeconv::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SettingsMap = std::map<std::string, std::string>;

// Flag name (without dashes) -> config key.
struct FlagSpec {
  std::string flag;
  std::string key;
  std::string help;
};

struct Subcommand {
  std::string name;
  std::string description;
  SettingsMap defaults;
  std::vector<FlagSpec> flags;
  std::function<int(const Settings&, std::ostream&)> action;
};

std::string metadata_line(const std::string& command, const Settings& settings) {
  std::string line = "# command=" + command;
  for (const auto& [key, value] : settings.values()) line += " " + key + "=" + value;
  return line;
}

std::string csv_document(const std::string& command, const Settings& settings,
                         const ScanResult& scan) {
  std::ostringstream os;
  os << "# modeconv " << kVersion << '\n' << metadata_line(command, settings) << '\n';
  write_csv(os, scan);
  return os.str();
}

nlohmann::json parameters_json(const Settings& settings) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, value] : settings.values()) j[key] = value;
  return j;
}

std::size_t scan_steps(const Settings& s) { return s.count("steps", 2); }

int scan_command(const std::string& command, const Settings& s, std::ostream& out,
                 const std::function<ScanResult(double, double, std::size_t)>& scan) {
  const double lo = s.number("range_min");
  const double hi = s.number("range_max");
  if (!(hi > lo)) throw ConfigError("range_max", "must be greater than range_min");
  const ScanResult result = scan(lo, hi, scan_steps(s));
  write_file_atomically(s.text("out"), csv_document(command, s, result));
  out << "wrote " << result.size() << " rows to " << s.text("out") << '\n';
  return kSuccess;
}

int cmd_oscillator(const Settings& s, std::ostream& out) {
  const double lambda = s.number("lambda");
  if (lambda < 0.0) throw ConfigError("lambda", "must be >= 0 (negative quartic is unbounded)");
  const auto truncation = static_cast<std::size_t>(
      s.count("truncation", oscillator::OscillatorModel::kMinTruncation));
  const auto model = oscillator::build_model(lambda, truncation);

  const std::size_t levels = std::min<std::size_t>(10, truncation);
  nlohmann::json eigenvalues = nlohmann::json::array();
  nlohmann::json first_order = nlohmann::json::array();
  nlohmann::json variances = nlohmann::json::array();
  for (std::size_t n = 0; n < levels; ++n) {
    eigenvalues.push_back(model.energy(n));
    first_order.push_back(oscillator::first_order_energy(n, lambda));
    variances.push_back(model.position_variance(n));
  }
  nlohmann::json overlaps = nlohmann::json::array();
  for (std::size_t n = 0; n < 4; ++n) overlaps.push_back(oscillator::mode_overlap(model, n));

  nlohmann::json doc;
  doc["tool"] = "modeconv";
  doc["version"] = kVersion;
  doc["command"] = "oscillator";
  doc["parameters"] = parameters_json(s);
  doc["lambda"] = lambda;
  doc["truncation"] = truncation;
  doc["eigenvalues"] = std::move(eigenvalues);
  doc["first_order_energies"] = std::move(first_order);
  doc["overlaps"] = std::move(overlaps);
  doc["position_variance"] = std::move(variances);
  write_file_atomically(s.text("out"), doc.dump(2) + "\n");
  out << "wrote oscillator report to " << s.text("out") << '\n';
  return kSuccess;
}

protocol::ConversionConfig protocol_config(const Settings& s) {
  protocol::ConversionConfig config;
  config.lambda_on = s.number("lambda");
  if (config.lambda_on < 0.0) throw ConfigError("lambda", "must be >= 0");
  config.truncation = static_cast<std::size_t>(
      s.count("truncation", oscillator::OscillatorModel::kMinTruncation));
  config.assignment = {{"1", static_cast<std::size_t>(s.count("level_1", 0))},
                       {"2", static_cast<std::size_t>(s.count("level_2", 0))}};
  if (config.assignment["1"] == config.assignment["2"]) {
    throw ConfigError("level_2", "must differ from level_1");
  }
  for (const char* key : {"level_1", "level_2"}) {
    if (s.count(key, 0) >= config.truncation) throw ConfigError(key, "beyond truncation");
  }
  config.ancilla.eta = s.number_in("eta", 0.0, 1.0);
  config.ancilla.alpha = s.number_in("alpha", -1.0, 1.0);
  config.ancilla.beta = s.number_in("beta", -1.0, 1.0);
  if (std::abs(std::norm(config.ancilla.alpha) + std::norm(config.ancilla.beta) - 1.0) > 1e-9) {
    throw ConfigError("beta", "alpha^2 + beta^2 must equal 1");
  }
  // Config files carry 9-10 digit amplitudes; renormalize to machine precision.
  const double slit_norm = std::sqrt(std::norm(config.ancilla.alpha) +
                                     std::norm(config.ancilla.beta));
  config.ancilla.alpha /= slit_norm;
  config.ancilla.beta /= slit_norm;
  config.ancilla.detect_amp =
      std::polar(s.number_in("detect_amp", 0.0, 1.0), s.number("detect_phase"));
  config.landing_probability = s.number_in("landing_prob", 0.0, 1.0);
  config.abort_gate = s.flag("gate");
  config.clock_period = s.number("clock_period");
  config.travel_plus_register_time = s.number_in("travel_plus_register_time", 0.0, 1e300);
  config.and_gate_time = s.number_in("and_gate_time", 0.0, 1e300);
  if (!(config.clock_period > config.travel_plus_register_time + config.and_gate_time)) {
    throw ConfigError("clock_period",
                      "must exceed travel_plus_register_time + and_gate_time");
  }
  config.t_meas = s.number("t_meas");
  if (!(config.t_meas > 0.0)) throw ConfigError("t_meas", "must be positive");
  config.ratio_threshold = s.number("ratio_threshold");
  if (!(config.ratio_threshold > 0.0)) throw ConfigError("ratio_threshold", "must be positive");
  return config;
}

int cmd_protocol(const Settings& s, std::ostream& out) {
  const auto config = protocol_config(s);
  const auto trials = s.count("trials", 1);
  const auto seed = s.count("seed", 0);
  const auto result = protocol::run_campaign(config, trials, seed);

  std::string log;
  log.reserve(result.outcomes.size() * 320);
  for (const auto& outcome : result.outcomes) log += protocol::to_json(outcome).dump() + '\n';
  write_file_atomically(s.text("out"), log);

  std::string summary_path = s.text("summary");
  if (summary_path.empty() || summary_path == "auto") summary_path = s.text("out") + ".summary.json";
  nlohmann::json summary = protocol::to_json(result.statistics);
  summary["tool"] = "modeconv";
  summary["version"] = kVersion;
  summary["parameters"] = parameters_json(s);
  write_file_atomically(summary_path, summary.dump(2) + "\n");

  const auto show = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("null");
  };
  out << "delivered_rate=" << format_number(result.statistics.delivered_rate) << '\n'
      << "mean_entropy=" << show(result.statistics.mean_entropy) << '\n'
      << "min_fidelity=" << show(result.statistics.min_fidelity) << '\n';
  return kSuccess;
}

SettingsMap scan_defaults(const std::string& out) {
  return {{"range_min", "0"}, {"range_max", "pi/2"}, {"steps", "91"}, {"out", out}};
}

std::vector<FlagSpec> scan_flags() {
  return {{"range-min", "range_min", "Start of the scan (number or k*pi/m)"},
          {"range-max", "range_max", "End of the scan (number or k*pi/m)"},
          {"steps", "steps", "Number of samples, at least 2"},
          {"out", "out", "Output CSV path"}};
}

std::vector<Subcommand> subcommands() {
  std::vector<Subcommand> cmds;
  cmds.push_back({"chsh", "CHSH sum and entanglement entropy vs analyzer angle",
                  scan_defaults("chsh.csv"), scan_flags(), [](const Settings& s, std::ostream& o) {
                    return scan_command("chsh", s, o, polarization::chsh_scan);
                  }});
  cmds.push_back({"entropy-rotation", "Mode entanglement entropy vs Hilbert-space rotation",
                  scan_defaults("entropy_rotation.csv"), scan_flags(),
                  [](const Settings& s, std::ostream& o) {
                    return scan_command("entropy-rotation", s, o,
                                        polarization::mode_rotation_entropy_scan);
                  }});
  cmds.push_back({"interferometer", "Four-mode Bragg interferometer CHSH sum and entropies",
                  scan_defaults("interferometer.csv"), scan_flags(),
                  [](const Settings& s, std::ostream& o) {
                    return scan_command("interferometer", s, o,
                                        interferometer::momentum_chsh_scan);
                  }});
  cmds.push_back({"oscillator", "Anharmonic oscillator spectrum, overlaps and widths",
                  {{"lambda", "0.04"}, {"truncation", "64"}, {"out", "oscillator.json"}},
                  {{"lambda", "lambda", "Quartic anharmonicity (>= 0)"},
                   {"truncation", "truncation", "Harmonic basis size (>= 8)"},
                   {"out", "out", "Output JSON path"}},
                  cmd_oscillator});
  cmds.push_back({"protocol", "Monte-Carlo conversion campaign with abort gate",
                  {{"trials", "100000"},
                   {"seed", "1"},
                   {"eta", "0.9"},
                   {"lambda", "0.02"},
                   {"truncation", "64"},
                   {"gate", "on"},
                   {"landing_prob", "0.5"},
                   {"alpha", "0.7071067811865476"},
                   {"beta", "0.7071067811865476"},
                   {"detect_amp", "0.7071067811865476"},
                   {"detect_phase", "0"},
                   {"level_1", "1"},
                   {"level_2", "2"},
                   {"clock_period", "10"},
                   {"travel_plus_register_time", "4"},
                   {"and_gate_time", "1"},
                   {"t_meas", "10000"},
                   {"ratio_threshold", "10"},
                   {"out", "protocol.jsonl"},
                   {"summary", "auto"}},
                  {{"trials", "trials", "Number of clock cycles"},
                   {"seed", "seed", "Campaign seed"},
                   {"eta", "eta", "Photodetection efficiency in [0, 1]"},
                   {"lambda", "lambda", "Anharmonicity when triggered"},
                   {"truncation", "truncation", "Harmonic basis size"},
                   {"gate", "gate", "Clock AND abort gate: on or off"},
                   {"out", "out", "JSON-lines outcome log path"},
                   {"summary", "summary", "Summary JSON path (default <out>.summary.json)"}},
                  cmd_protocol});
  return cmds;
}

std::set<std::string> keys_of(const SettingsMap& m) {
  std::set<std::string> keys;
  for (const auto& [k, v] : m) keys.insert(k);
  return keys;
}

}  // namespace

void write_file_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path temp = target.string() + ".tmp";
  {
    std::ofstream os(temp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + temp.string() + "' for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    os.flush();
    if (!os) throw IoError("failed writing '" + temp.string() + "'");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto commands = subcommands();

  CLI::App app{"modeconv: mode/particle entanglement simulator", "modeconv"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  struct Bound {
    const Subcommand* command;
    CLI::App* app;
    std::string config_path;
    std::map<std::string, std::string> flag_values;
  };
  std::vector<Bound> bound;
  bound.reserve(commands.size());
  for (const auto& cmd : commands) {
    bound.push_back({&cmd, app.add_subcommand(cmd.name, cmd.description), {}, {}});
  }
  for (auto& b : bound) {
    b.app->add_option("--config", b.config_path, "Flat key = value run configuration");
    for (const auto& f : b.command->flags) {
      b.app->add_option("--" + f.flag, b.flag_values[f.key], f.help);
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "modeconv: " << e.what() << '\n';
    return kUsageError;
  }

  for (auto& b : bound) {
    if (!b.app->parsed()) continue;
    const Subcommand& cmd = *b.command;
    try {
      SettingsMap values = cmd.defaults;
      if (!b.config_path.empty()) {
        std::ifstream in(b.config_path);
        if (!in) throw ConfigError("--config", "cannot read '" + b.config_path + "'");
        for (auto& [k, v] : parse_run_config(in, keys_of(cmd.defaults))) values[k] = v;
      }
      for (const auto& f : cmd.flags) {
        if (b.app->count("--" + f.flag) > 0) values[f.key] = b.flag_values[f.key];
      }
      return cmd.action(Settings(std::move(values)), out);
    } catch (const ConfigError& e) {
      err << "modeconv " << cmd.name << ": " << e.what() << '\n';
      return kUsageError;
    } catch (const IoError& e) {
      err << "modeconv " << cmd.name << ": " << e.what() << '\n';
      return kUsageError;
    } catch (const PreconditionError& e) {
      err << "modeconv " << cmd.name << ": physics precondition failed: " << e.what() << '\n';
      return kPhysicsError;
    } catch (const Error& e) {
      err << "modeconv " << cmd.name << ": " << e.what() << '\n';
      return kUsageError;
    }
  }
  return kUsageError;
}

}  // namespace modeconv::cli
