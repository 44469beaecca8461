#pragma once

#include <cstddef>
#include <map>
#include <string>

#include <Eigen/Dense>

namespace modeconv::oscillator {

/// H = p^2/2 + x^2/2 + lambda x^4/4 (hbar = m = omega = 1) diagonalized in
/// the lowest `truncation` harmonic number states.
///
/// Eigenvalues ascend. Column n of eigenvectors() is the n-th eigenstate
/// expanded in the harmonic basis, with its sign chosen so that its n-th
/// component (the overlap with the unperturbed state |n>) is non-negative.
class OscillatorModel {
 public:
  static constexpr std::size_t kMinTruncation = 8;
  static constexpr std::size_t kDefaultTruncation = 64;

  [[nodiscard]] double lambda() const { return lambda_; }
  [[nodiscard]] std::size_t truncation() const { return truncation_; }
  [[nodiscard]] const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  [[nodiscard]] const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

  [[nodiscard]] double energy(std::size_t n) const;
  [[nodiscard]] Eigen::VectorXd eigenvector(std::size_t n) const;

  /// <n(lambda)| x^2 |n(lambda)>.
  [[nodiscard]] double position_variance(std::size_t n) const;

  friend OscillatorModel build_model(double lambda, std::size_t truncation);

 private:
  OscillatorModel() = default;

  double lambda_ = 0.0;
  std::size_t truncation_ = 0;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  Eigen::MatrixXd x_squared_;
};

/// Throws ParameterError for lambda < 0 (unbounded potential) or
/// truncation < 8.
[[nodiscard]] OscillatorModel build_model(double lambda,
                                          std::size_t truncation = OscillatorModel::kDefaultTruncation);

/// Matrix of x = (a + a+)/sqrt(2) in the lowest `size` number states.
[[nodiscard]] Eigen::MatrixXd position_matrix(std::size_t size);

/// Exact projection of x^k onto the lowest `size` number states. The power
/// is taken at twice the size and cropped so that no basis-edge term leaks in.
[[nodiscard]] Eigen::MatrixXd position_power(std::size_t size, int power);

/// n + 1/2 + (lambda/4) <n|x^4|n> = n + 1/2 + (3 lambda/16)(2n^2 + 2n + 1).
[[nodiscard]] double first_order_energy(std::size_t n, double lambda);

/// s_n = <n | n(lambda)> >= 0, levels matched by eigenvalue order.
[[nodiscard]] double mode_overlap(const OscillatorModel& model, std::size_t n);

/// Photon label <-> oscillator level binding. Injective, so it inverts.
class ModeMapping {
 public:
  /// Photon "1" -> level 1, photon "2" -> level 2.
  ModeMapping();
  explicit ModeMapping(std::map<std::string, std::size_t> assignment);

  [[nodiscard]] std::size_t level_of(const std::string& photon) const;
  [[nodiscard]] const std::string& photon_at(std::size_t level) const;

  [[nodiscard]] const std::map<std::string, std::size_t>& assignment() const { return forward_; }
  [[nodiscard]] const std::map<std::size_t, std::string>& inverse() const { return inverse_; }

  /// Reconstructs the photon -> level assignment from the inverse table.
  [[nodiscard]] std::map<std::string, std::size_t> invert_back() const;

 private:
  std::map<std::string, std::size_t> forward_;
  std::map<std::size_t, std::string> inverse_;
};

[[nodiscard]] ModeMapping map_modes_to_eigenfunctions(
    const std::map<std::string, std::size_t>& assignment);

/// Inputs to the timescale hierarchy hbar/dE << hbar/H << t_meas.
struct AdiabaticBudget {
  double delta_e = 1.0;
  double h_tilde = 0.01;
  double t_meas = 1000.0;
  double ratio_threshold = 10.0;
};

struct AdiabaticVerdict {
  bool pass = false;
  double gap_ratio = 0.0;          // (hbar/H) / (hbar/dE) = dE / H
  double measurement_ratio = 0.0;  // t_meas / (hbar/H) = t_meas * H
};

/// Throws ParameterError when any budget entry is not strictly positive.
[[nodiscard]] AdiabaticVerdict adiabatic_check(const AdiabaticBudget& budget);

}  // namespace modeconv::oscillator
