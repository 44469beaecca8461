#include "run_config.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace modeconv::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_plain(const std::string& text, double& out) {
  if (text.empty()) return false;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::map<std::string, std::string> parse_run_config(std::istream& in,
                                                     const std::set<std::string>& allowed) {
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(stripped, "line " + std::to_string(line_no) + " is not key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (!allowed.contains(key)) throw ConfigError(key, "unknown key");
    if (value.empty()) throw ConfigError(key, "empty value");
    if (!values.emplace(key, value).second) throw ConfigError(key, "given more than once");
  }
  return values;
}

double parse_number(const std::string& key, const std::string& value) {
  double out = 0.0;
  if (parse_plain(value, out)) {
    if (!std::isfinite(out)) throw ConfigError(key, "value must be finite");
    return out;
  }
  // [-][k*]pi[/m]
  std::string rest = value;
  double sign = 1.0;
  if (!rest.empty() && rest.front() == '-') {
    sign = -1.0;
    rest.erase(0, 1);
  }
  const auto pi_at = rest.find("pi");
  if (pi_at == std::string::npos) throw ConfigError(key, "'" + value + "' is not a number");
  double factor = 1.0;
  if (pi_at > 0) {
    if (rest[pi_at - 1] != '*' || !parse_plain(rest.substr(0, pi_at - 1), factor)) {
      throw ConfigError(key, "'" + value + "' is not a number");
    }
  }
  double divisor = 1.0;
  const std::string tail = rest.substr(pi_at + 2);
  if (!tail.empty()) {
    if (tail.front() != '/' || !parse_plain(tail.substr(1), divisor) || divisor == 0.0) {
      throw ConfigError(key, "'" + value + "' is not a number");
    }
  }
  return sign * factor * std::numbers::pi / divisor;
}

const std::string& Settings::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(key, "missing value");
  return it->second;
}

double Settings::number(const std::string& key) const { return parse_number(key, text(key)); }

double Settings::number_in(const std::string& key, double lo, double hi) const {
  const double v = number(key);
  if (!(v >= lo && v <= hi)) {
    throw ConfigError(key, "value " + text(key) + " outside [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
  }
  return v;
}

std::uint64_t Settings::count(const std::string& key, std::uint64_t minimum) const {
  const std::string& value = text(key);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key, "'" + value + "' is not a non-negative integer");
  }
  if (out < minimum) {
    throw ConfigError(key, "must be at least " + std::to_string(minimum));
  }
  return out;
}

bool Settings::flag(const std::string& key) const {
  const std::string& value = text(key);
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  throw ConfigError(key, "expected on/off, got '" + value + "'");
}

}  // namespace modeconv::cli
