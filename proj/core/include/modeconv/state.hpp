#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace modeconv {

using Complex = std::complex<double>;

/// Ordered list of named tensor factors with their local dimensions.
///
/// The flat amplitude index is row-major over the factors: the first factor
/// is the most significant digit.
class BasisLabel {
 public:
  BasisLabel() = default;
  BasisLabel(std::vector<std::string> names, std::vector<std::size_t> dims);

  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
  [[nodiscard]] std::size_t factor_count() const { return names_.size(); }
  [[nodiscard]] std::size_t total_dim() const { return total_dim_; }

  /// Position of a factor; throws LabelError when the name is unknown.
  [[nodiscard]] std::size_t index_of(std::string_view name) const;
  [[nodiscard]] bool contains(std::string_view name) const;

  /// Stride of a factor in the flat index.
  [[nodiscard]] std::size_t stride(std::size_t factor) const;

  /// Flat index of a multi-index (one digit per factor).
  [[nodiscard]] std::size_t flat_index(std::span<const std::size_t> digits) const;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> dims_;
  std::size_t total_dim_ = 1;
};

/// Complex amplitude vector over a labeled tensor-product basis.
class PureState {
 public:
  PureState(BasisLabel basis, std::vector<Complex> amplitudes);

  /// Computational basis ket with one digit per factor.
  static PureState basis_state(BasisLabel basis, std::span<const std::size_t> digits);

  [[nodiscard]] const BasisLabel& basis() const { return basis_; }
  [[nodiscard]] const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  [[nodiscard]] Complex amplitude(std::size_t flat) const { return amplitudes_.at(flat); }
  [[nodiscard]] std::size_t dim() const { return amplitudes_.size(); }

  [[nodiscard]] double norm() const;

  /// Copy scaled to unit norm; throws PreconditionError for the zero vector.
  [[nodiscard]] PureState normalized() const;

 private:
  BasisLabel basis_;
  std::vector<Complex> amplitudes_;
};

/// Reduced density matrix of one tensor factor.
///
/// Construction checks Hermiticity, unit trace, and positive
/// semi-definiteness to within `kDensityTolerance`.
class ReducedDensityMatrix {
 public:
  static constexpr double kDensityTolerance = 1e-12;

  explicit ReducedDensityMatrix(Eigen::MatrixXcd entries);

  [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  [[nodiscard]] const Eigen::MatrixXcd& entries() const { return entries_; }

  /// Ascending spectrum with values in [-1e-12, 0) clamped to zero.
  [[nodiscard]] const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  Eigen::MatrixXcd entries_;
  Eigen::VectorXd eigenvalues_;
};

/// Kronecker product in factor order. Factor names must be disjoint.
[[nodiscard]] PureState tensor(std::span<const PureState> states);
[[nodiscard]] PureState tensor(const PureState& left, const PureState& right);

/// Tr_rest |psi><psi| / <psi|psi> for the factor named `keep`.
[[nodiscard]] ReducedDensityMatrix partial_trace(const PureState& state, std::string_view keep);

/// Entropy in bits, 0 log 0 = 0.
[[nodiscard]] double von_neumann_entropy(const ReducedDensityMatrix& rho);

/// (1 / (1 - alpha)) log2 Tr rho^alpha in bits. Requires alpha > 0, alpha != 1.
[[nodiscard]] double renyi_entropy(const ReducedDensityMatrix& rho, double alpha);

/// |<a|b>|^2 for states on an identical basis.
[[nodiscard]] double fidelity(const PureState& a, const PureState& b);

/// Applies `op` (dim x dim of the named factor) to that factor only.
[[nodiscard]] PureState apply_local(const PureState& state, std::string_view factor,
                                    const Eigen::MatrixXcd& op);

/// Von Neumann entropy of `factor` in a pure state, shorthand for the
/// partial_trace/von_neumann_entropy pair.
[[nodiscard]] double entanglement_entropy(const PureState& state, std::string_view factor);

}  // namespace modeconv
