#include "modeconv/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "modeconv/errors.hpp"

namespace modeconv {

ScanResult::ScanResult(std::string parameter_name, std::vector<std::string> value_columns)
    : parameter_name_(std::move(parameter_name)) {
  columns_.reserve(value_columns.size() + 1);
  columns_.push_back(parameter_name_);
  for (auto& c : value_columns) columns_.push_back(std::move(c));
}

void ScanResult::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) {
    throw InvariantError("scan row has " + std::to_string(row.size()) + " values, expected " +
                         std::to_string(columns_.size()));
  }
  if (!rows_.empty() && !(row.front() > rows_.back().front())) {
    throw InvariantError("scan parameter must increase strictly");
  }
  rows_.push_back(std::move(row));
}

std::vector<double> ScanResult::column(const std::string& name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) throw ParameterError("no scan column named '" + name + "'");
  const auto k = static_cast<std::size_t>(it - columns_.begin());
  std::vector<double> values;
  values.reserve(rows_.size());
  for (const auto& r : rows_) values.push_back(r[k]);
  return values;
}

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
  if (steps < 2) throw ParameterError("scan needs at least 2 steps");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw ParameterError("scan range must be finite with max > min");
  }
  std::vector<double> xs(steps);
  const double step = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) xs[i] = lo + step * static_cast<double>(i);
  xs.back() = hi;
  return xs;
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

void write_csv(std::ostream& os, const ScanResult& scan) {
  for (std::size_t k = 0; k < scan.columns().size(); ++k) {
    os << (k ? "," : "") << scan.columns()[k];
  }
  os << '\n';
  for (const auto& row : scan.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      os << (k ? "," : "") << format_number(row[k]);
    }
    os << '\n';
  }
}

}  // namespace modeconv
