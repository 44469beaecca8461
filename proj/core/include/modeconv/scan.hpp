#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace modeconv {

/// A swept parameter and the quantities evaluated at each value.
///
/// `columns()[0]` is the parameter itself. Rows must match the column
/// count and the parameter must increase strictly from row to row.
class ScanResult {
 public:
  ScanResult(std::string parameter_name, std::vector<std::string> value_columns);

  void add_row(std::vector<double> row);

  [[nodiscard]] const std::string& parameter_name() const { return parameter_name_; }
  [[nodiscard]] const std::vector<std::string>& columns() const { return columns_; }
  [[nodiscard]] const std::vector<std::vector<double>>& rows() const { return rows_; }
  [[nodiscard]] std::size_t size() const { return rows_.size(); }

  /// Values of one named column, in row order.
  [[nodiscard]] std::vector<double> column(const std::string& name) const;

 private:
  std::string parameter_name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

/// `steps` evenly spaced points from lo to hi inclusive. Requires steps >= 2
/// and hi > lo.
[[nodiscard]] std::vector<double> linspace(double lo, double hi, std::size_t steps);

/// Formats with 12 significant digits; negative zero prints as 0.
[[nodiscard]] std::string format_number(double value);

/// Header row then one row per sample, comma separated.
void write_csv(std::ostream& os, const ScanResult& scan);

}  // namespace modeconv
