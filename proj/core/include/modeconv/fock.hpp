#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modeconv/state.hpp"

namespace modeconv {

/// One term m|n_a, n_b> of a two-mode Fock superposition.
struct FockTerm {
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  Complex amplitude{1.0};
};

/// Two-mode state over occupation numbers 0..cutoff for each mode.
[[nodiscard]] PureState two_mode_fock_state(const std::string& mode_a, const std::string& mode_b,
                                            std::size_t cutoff,
                                            const std::vector<FockTerm>& terms);

/// Passive two-mode rotation a+ -> cos(phi) a+ + sin(phi) b+,
/// b+ -> -sin(phi) a+ + cos(phi) b+, applied term by term to a two-factor
/// occupation-number state. Photon number is conserved, so every input term
/// with n_a + n_b larger than a factor's cutoff raises ParameterError.
[[nodiscard]] PureState rotate_modes(const PureState& state, double phi);

}  // namespace modeconv
