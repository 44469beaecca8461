#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace modeconv::cli {

/// A configuration problem tied to one named key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error("config key '" + key + "': " + message), key_(std::move(key)) {}

  [[nodiscard]] const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Flat `key = value` text. Blank lines and lines starting with '#' are
/// skipped; keys outside `allowed` and repeated keys are errors.
[[nodiscard]] std::map<std::string, std::string> parse_run_config(
    std::istream& in, const std::set<std::string>& allowed);

/// Typed views over a settings map. Every failure names the key.
class Settings {
 public:
  explicit Settings(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  [[nodiscard]] const std::map<std::string, std::string>& values() const { return values_; }
  [[nodiscard]] const std::string& text(const std::string& key) const;

  /// Plain number, or an angle expression `[-][k*]pi[/m]`.
  [[nodiscard]] double number(const std::string& key) const;
  [[nodiscard]] double number_in(const std::string& key, double lo, double hi) const;
  [[nodiscard]] std::uint64_t count(const std::string& key, std::uint64_t minimum) const;
  /// on/off, true/false, 1/0.
  [[nodiscard]] bool flag(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
};

/// Parses `value` as a number or pi expression; throws ConfigError(key).
[[nodiscard]] double parse_number(const std::string& key, const std::string& value);

}  // namespace modeconv::cli
