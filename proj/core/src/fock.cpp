#include "modeconv/fock.hpp"

#include <array>
#include <cmath>

#include "modeconv/errors.hpp"

namespace modeconv {

namespace {

double factorial(std::size_t n) { return std::tgamma(static_cast<double>(n) + 1.0); }

double binomial(std::size_t n, std::size_t k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace

PureState two_mode_fock_state(const std::string& mode_a, const std::string& mode_b,
                              std::size_t cutoff, const std::vector<FockTerm>& terms) {
  BasisLabel basis({mode_a, mode_b}, {cutoff + 1, cutoff + 1});
  std::vector<Complex> amps(basis.total_dim());
  for (const auto& t : terms) {
    const std::array<std::size_t, 2> digits{t.n_a, t.n_b};
    amps[basis.flat_index(digits)] += t.amplitude;
  }
  return {std::move(basis), std::move(amps)};
}

PureState rotate_modes(const PureState& state, double phi) {
  const auto& basis = state.basis();
  if (basis.factor_count() != 2) {
    throw ParameterError("rotate_modes: expected a two-mode state");
  }
  const std::size_t dim_a = basis.dims()[0];
  const std::size_t dim_b = basis.dims()[1];
  const double c = std::cos(phi);
  const double s = std::sin(phi);

  std::vector<Complex> out(basis.total_dim());
  for (std::size_t m = 0; m < dim_a; ++m) {
    for (std::size_t n = 0; n < dim_b; ++n) {
      const Complex amp = state.amplitudes()[m * dim_b + n];
      if (amp == Complex(0.0)) continue;
      const std::size_t total = m + n;
      if (total >= dim_a || total >= dim_b) {
        throw ParameterError("rotate_modes: |" + std::to_string(m) + "," + std::to_string(n) +
                             "> does not fit the occupation cutoff after rotation");
      }
      // (c a+ + s b+)^m (-s a+ + c b+)^n |0,0> / sqrt(m! n!)
      const double prefactor = 1.0 / std::sqrt(factorial(m) * factorial(n));
      for (std::size_t k = 0; k <= m; ++k) {
        const double from_a = binomial(m, k) * std::pow(c, double(k)) * std::pow(s, double(m - k));
        for (std::size_t l = 0; l <= n; ++l) {
          const double from_b = binomial(n, l) * std::pow(-s, double(l)) *
                                std::pow(c, double(n - l));
          const std::size_t out_a = k + l;
          const std::size_t out_b = total - out_a;
          const double creation = std::sqrt(factorial(out_a) * factorial(out_b));
          out[out_a * dim_b + out_b] += amp * (prefactor * from_a * from_b * creation);
        }
      }
    }
  }
  return {basis, std::move(out)};
}

}  // namespace modeconv
