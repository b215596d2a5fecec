#pragma once

// Chains used by the demo and the regression suites.
//
// Two-state chain x: p = P(0 -> 1) = 0.6232, q = P(1 -> 0) = 0.6335.
// Four-state chain y over two-bit states ordered {00, 10, 01, 11}; the left
// bit of y is the hidden-state observable z. The four-state matrix is
// published with four-digit entries, and its third column sums to 0.9999,
// so reference_chain_y() rescales the columns before validation.

#include <array>

#include "linlaw/markov.hpp"

namespace linlaw {

inline constexpr double kChainXp = 0.6232;
inline constexpr double kChainXq = 0.6335;

inline Matrix reference_matrix_x() {
  return Matrix{{0.3768, 0.6335},
                {0.6232, 0.3665}};
}

/// As published, columns not renormalized.
inline Matrix reference_matrix_y_raw() {
  return Matrix{{0.1323, 0.3055, 0.2635, 0.1005},
                {0.4632, 0.1256, 0.0126, 0.3680},
                {0.3622, 0.3303, 0.6189, 0.1519},
                {0.0423, 0.2386, 0.1049, 0.3796}};
}

inline TransferMatrix reference_chain_x() { return TransferMatrix::validate(reference_matrix_x()); }

inline TransferMatrix reference_chain_y() {
  return TransferMatrix::validate(normalize_columns(reference_matrix_y_raw()));
}

/// Left bit of {00, 10, 01, 11}.
inline constexpr std::array<State, 4> kLeftBitMap{0, 1, 0, 1};

inline constexpr State kChainXInitial = 0;
/// "01" in the {00, 10, 01, 11} ordering.
inline constexpr State kChainYInitial = 2;

}  // namespace linlaw
