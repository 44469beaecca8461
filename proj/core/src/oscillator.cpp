#include "modeconv/oscillator.hpp"

#include <cmath>

#include "modeconv/errors.hpp"

namespace modeconv::oscillator {

double OscillatorModel::energy(std::size_t n) const {
  if (n >= truncation_) throw ParameterError("level " + std::to_string(n) + " beyond truncation");
  return eigenvalues_[static_cast<Eigen::Index>(n)];
}

Eigen::VectorXd OscillatorModel::eigenvector(std::size_t n) const {
  if (n >= truncation_) throw ParameterError("level " + std::to_string(n) + " beyond truncation");
  return eigenvectors_.col(static_cast<Eigen::Index>(n));
}

double OscillatorModel::position_variance(std::size_t n) const {
  const Eigen::VectorXd v = eigenvector(n);
  return v.dot(x_squared_ * v);
}

Eigen::MatrixXd position_matrix(std::size_t size) {
  const auto n = static_cast<Eigen::Index>(size);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    const double element = std::sqrt(static_cast<double>(k + 1) / 2.0);
    x(k, k + 1) = element;
    x(k + 1, k) = element;
  }
  return x;
}

Eigen::MatrixXd position_power(std::size_t size, int power) {
  if (power < 0) throw ParameterError("position_power: negative power");
  const Eigen::MatrixXd x = position_matrix(2 * size);
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(x.rows(), x.cols());
  for (int k = 0; k < power; ++k) result = result * x;
  const auto n = static_cast<Eigen::Index>(size);
  return result.topLeftCorner(n, n);
}

OscillatorModel build_model(double lambda, std::size_t truncation) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw ParameterError("anharmonicity lambda must be >= 0 (negative quartic is unbounded)");
  }
  if (truncation < OscillatorModel::kMinTruncation) {
    throw ParameterError("truncation must be at least " +
                         std::to_string(OscillatorModel::kMinTruncation));
  }
  const auto n = static_cast<Eigen::Index>(truncation);

  Eigen::MatrixXd h = (lambda / 4.0) * position_power(truncation, 4);
  for (Eigen::Index k = 0; k < n; ++k) h(k, k) += static_cast<double>(k) + 0.5;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw PreconditionError("oscillator eigensolver did not converge");
  }

  OscillatorModel model;
  model.lambda_ = lambda;
  model.truncation_ = truncation;
  model.eigenvalues_ = solver.eigenvalues();
  model.eigenvectors_ = solver.eigenvectors();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (model.eigenvectors_(k, k) < 0.0) model.eigenvectors_.col(k) *= -1.0;
  }
  model.x_squared_ = position_power(truncation, 2);
  return model;
}

double first_order_energy(std::size_t n, double lambda) {
  const auto m = static_cast<double>(n);
  return m + 0.5 + (3.0 * lambda / 16.0) * (2.0 * m * m + 2.0 * m + 1.0);
}

double mode_overlap(const OscillatorModel& model, std::size_t n) {
  if (n >= model.truncation()) {
    throw ParameterError("mode_overlap: level " + std::to_string(n) + " out of range");
  }
  const auto k = static_cast<Eigen::Index>(n);
  return model.eigenvectors()(k, k);
}

ModeMapping::ModeMapping() : ModeMapping({{"1", 1}, {"2", 2}}) {}

ModeMapping::ModeMapping(std::map<std::string, std::size_t> assignment)
    : forward_(std::move(assignment)) {
  if (forward_.empty()) throw ParameterError("mode mapping needs at least one photon");
  for (const auto& [photon, level] : forward_) {
    if (!inverse_.emplace(level, photon).second) {
      throw ParameterError("mode mapping: level " + std::to_string(level) +
                           " assigned to more than one photon");
    }
  }
}

std::size_t ModeMapping::level_of(const std::string& photon) const {
  const auto it = forward_.find(photon);
  if (it == forward_.end()) throw LabelError("mode mapping: unknown photon '" + photon + "'");
  return it->second;
}

const std::string& ModeMapping::photon_at(std::size_t level) const {
  const auto it = inverse_.find(level);
  if (it == inverse_.end()) {
    throw LabelError("mode mapping: no photon at level " + std::to_string(level));
  }
  return it->second;
}

std::map<std::string, std::size_t> ModeMapping::invert_back() const {
  std::map<std::string, std::size_t> out;
  for (const auto& [level, photon] : inverse_) out.emplace(photon, level);
  return out;
}

ModeMapping map_modes_to_eigenfunctions(const std::map<std::string, std::size_t>& assignment) {
  return ModeMapping(assignment);
}

AdiabaticVerdict adiabatic_check(const AdiabaticBudget& budget) {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(budget.delta_e) || !positive(budget.h_tilde) || !positive(budget.t_meas) ||
      !positive(budget.ratio_threshold)) {
    throw ParameterError("adiabatic budget entries must all be positive");
  }
  AdiabaticVerdict verdict;
  verdict.gap_ratio = budget.delta_e / budget.h_tilde;
  verdict.measurement_ratio = budget.t_meas * budget.h_tilde;
  verdict.pass = verdict.gap_ratio >= budget.ratio_threshold &&
                 verdict.measurement_ratio >= budget.ratio_threshold;
  return verdict;
}

}  // namespace modeconv::oscillator
