#include "modeconv/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "modeconv/errors.hpp"

namespace modeconv {

BasisLabel::BasisLabel(std::vector<std::string> names, std::vector<std::size_t> dims)
    : names_(std::move(names)), dims_(std::move(dims)) {
  if (names_.size() != dims_.size()) {
    throw LabelError("basis label: " + std::to_string(names_.size()) + " names for " +
                     std::to_string(dims_.size()) + " dimensions");
  }
  std::set<std::string> seen;
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (!seen.insert(names_[k]).second) {
      throw LabelError("basis label: duplicate factor name '" + names_[k] + "'");
    }
    if (dims_[k] == 0) {
      throw LabelError("basis label: factor '" + names_[k] + "' has dimension 0");
    }
    total_dim_ *= dims_[k];
  }
}

std::size_t BasisLabel::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw LabelError("unknown factor '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - names_.begin());
}

bool BasisLabel::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t BasisLabel::stride(std::size_t factor) const {
  std::size_t s = 1;
  for (std::size_t k = factor + 1; k < dims_.size(); ++k) s *= dims_[k];
  return s;
}

std::size_t BasisLabel::flat_index(std::span<const std::size_t> digits) const {
  if (digits.size() != dims_.size()) {
    throw LabelError("flat_index: expected " + std::to_string(dims_.size()) + " digits");
  }
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (digits[k] >= dims_[k]) {
      throw ParameterError("flat_index: digit " + std::to_string(digits[k]) +
                           " out of range for factor '" + names_[k] + "'");
    }
    flat = flat * dims_[k] + digits[k];
  }
  return flat;
}

PureState::PureState(BasisLabel basis, std::vector<Complex> amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != basis_.total_dim()) {
    throw InvariantError("pure state: " + std::to_string(amplitudes_.size()) +
                         " amplitudes for basis of dimension " +
                         std::to_string(basis_.total_dim()));
  }
}

PureState PureState::basis_state(BasisLabel basis, std::span<const std::size_t> digits) {
  std::vector<Complex> amps(basis.total_dim());
  amps[basis.flat_index(digits)] = 1.0;
  return {std::move(basis), std::move(amps)};
}

double PureState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

PureState PureState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw PreconditionError("cannot normalize the zero vector");
  std::vector<Complex> amps(amplitudes_);
  for (auto& a : amps) a /= n;
  return {basis_, std::move(amps)};
}

ReducedDensityMatrix::ReducedDensityMatrix(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw InvariantError("density matrix must be square and non-empty");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
    throw InvariantError("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - Complex(1.0)) > kDensityTolerance) {
    throw InvariantError("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
  eigenvalues_ = solver.eigenvalues();
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
    if (eigenvalues_[i] < -kDensityTolerance) {
      throw InvariantError("density matrix has a negative eigenvalue");
    }
    eigenvalues_[i] = std::max(eigenvalues_[i], 0.0);
  }
}

PureState tensor(std::span<const PureState> states) {
  if (states.empty()) throw ParameterError("tensor: no states given");
  std::vector<std::string> names;
  std::vector<std::size_t> dims;
  std::vector<Complex> amps{Complex(1.0)};
  for (const auto& s : states) {
    names.insert(names.end(), s.basis().names().begin(), s.basis().names().end());
    dims.insert(dims.end(), s.basis().dims().begin(), s.basis().dims().end());
    std::vector<Complex> next;
    next.reserve(amps.size() * s.dim());
    for (const auto& left : amps) {
      for (const auto& right : s.amplitudes()) next.push_back(left * right);
    }
    amps = std::move(next);
  }
  // BasisLabel rejects duplicate names.
  return {BasisLabel(std::move(names), std::move(dims)), std::move(amps)};
}

PureState tensor(const PureState& left, const PureState& right) {
  const std::vector<PureState> pair{left, right};
  return tensor(std::span<const PureState>(pair));
}

namespace {

// Rows index the kept factor, columns everything else.
Eigen::MatrixXcd split_amplitudes(const PureState& state, std::size_t factor) {
  const auto& basis = state.basis();
  const std::size_t d = basis.dims()[factor];
  const std::size_t inner = basis.stride(factor);
  const std::size_t rest = basis.total_dim() / d;
  Eigen::MatrixXcd m(d, rest);
  for (std::size_t i = 0; i < basis.total_dim(); ++i) {
    const std::size_t digit = (i / inner) % d;
    const std::size_t r = (i / (inner * d)) * inner + i % inner;
    m(digit, r) = state.amplitudes()[i];
  }
  return m;
}

std::vector<Complex> merge_amplitudes(const Eigen::MatrixXcd& m, const BasisLabel& basis,
                                      std::size_t factor) {
  const std::size_t d = basis.dims()[factor];
  const std::size_t inner = basis.stride(factor);
  std::vector<Complex> amps(basis.total_dim());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const std::size_t digit = (i / inner) % d;
    const std::size_t r = (i / (inner * d)) * inner + i % inner;
    amps[i] = m(digit, r);
  }
  return amps;
}

}  // namespace

ReducedDensityMatrix partial_trace(const PureState& state, std::string_view keep) {
  const std::size_t factor = state.basis().index_of(keep);
  const double norm2 = state.norm() * state.norm();
  if (norm2 == 0.0) throw PreconditionError("partial_trace: zero state");
  const Eigen::MatrixXcd m = split_amplitudes(state, factor);
  Eigen::MatrixXcd rho = (m * m.adjoint()) / norm2;
  // Symmetrize away rounding in the off-diagonal pairs.
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return ReducedDensityMatrix(std::move(rho));
}

double von_neumann_entropy(const ReducedDensityMatrix& rho) {
  double s = 0.0;
  for (const double p : rho.eigenvalues()) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return std::max(s, 0.0);
}

double renyi_entropy(const ReducedDensityMatrix& rho, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    throw ParameterError("renyi_entropy: alpha must be positive, finite and != 1");
  }
  double trace = 0.0;
  for (const double p : rho.eigenvalues()) {
    if (p > 0.0) trace += std::pow(p, alpha);
  }
  return std::max(std::log2(trace) / (1.0 - alpha), 0.0);
}

double fidelity(const PureState& a, const PureState& b) {
  if (!(a.basis() == b.basis())) throw LabelError("fidelity: basis mismatch");
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return std::clamp(std::norm(overlap), 0.0, 1.0);
}

PureState apply_local(const PureState& state, std::string_view factor,
                      const Eigen::MatrixXcd& op) {
  const std::size_t k = state.basis().index_of(factor);
  const auto d = static_cast<Eigen::Index>(state.basis().dims()[k]);
  if (op.rows() != d || op.cols() != d) {
    throw ParameterError("apply_local: operator shape does not match factor '" +
                         std::string(factor) + "'");
  }
  const Eigen::MatrixXcd m = op * split_amplitudes(state, k);
  return {state.basis(), merge_amplitudes(m, state.basis(), k)};
}

double entanglement_entropy(const PureState& state, std::string_view factor) {
  return von_neumann_entropy(partial_trace(state, factor));
}

}  // namespace modeconv
