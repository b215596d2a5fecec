#pragma once

// Finite-state Markov chains in the column-stochastic convention:
// entry (x, y) of the transfer matrix is the probability of the step y -> x.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "linlaw/matrix.hpp"
#include "linlaw/series.hpp"

namespace linlaw {

inline constexpr double kEntryTolerance = 1e-12;
inline constexpr double kColumnSumTolerance = 1e-9;

class TransferMatrix {
public:
  /// Validates a raw matrix. Throws NotSquare for non-square input or
  /// dim < 2, NotStochastic when an entry leaves [0, 1] or a column sum
  /// deviates from 1 by more than kColumnSumTolerance.
  static TransferMatrix validate(Matrix raw);

  /// The two-state chain with p = P(0 -> 1) and q = P(1 -> 0).
  static TransferMatrix binary(double p, double q);

  std::size_t dim() const noexcept { return m_.rows(); }

  /// Probability of moving from state `from` to state `to`.
  double prob(std::size_t to, std::size_t from) const { return m_(to, from); }

  const Matrix& matrix() const noexcept { return m_; }

private:
  explicit TransferMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Rescales every column of a nonnegative matrix to sum to one. Used for
/// matrices published with rounded entries.
Matrix normalize_columns(Matrix raw);

struct DistributionVector {
  std::vector<double> probs;
};

/// Stationary distribution by power iteration from the uniform vector.
///
/// Iterates until the max-norm change drops to 1e-14, at most 10^6 steps.
/// Throws NonUnique when the iteration does not converge (periodic chains)
/// or when the eigenvalue 1 is repeated (reducible chains such as the
/// identity, where the uniform start is a fixed point but not the only one).
DistributionVector equilibrium(const TransferMatrix& t);

/// Eigenvalues sorted by modulus, then real part, then imaginary part,
/// all descending.
std::vector<std::complex<double>> spectrum(const TransferMatrix& t);

/// Coefficients of det(lambda I - T) in ascending powers; the last one is 1.
std::vector<double> char_poly_coeffs(const TransferMatrix& t);

/// Samples a path of length n starting at x0. Each step draws one uniform
/// variate u and picks the first state whose cumulative column probability,
/// summed down the column of the current state, exceeds u.
CategoricalSeries simulate(const TransferMatrix& t, State x0, std::size_t n,
                           std::uint64_t seed);

/// Two-state chain through x' = floor(1 + p - xi + (1 - p - q) x).
///
/// xi is taken as 1 - u for the same variate u that simulate() would draw,
/// which makes both samplers produce identical paths for equal seeds.
CategoricalSeries simulate_binary_langevin(double p, double q, State x0, std::size_t n,
                                           std::uint64_t seed);

/// Relabels every element through state_map (indexed by old state). The
/// new alphabet is the image of the map, renumbered densely in ascending
/// order of the mapped labels.
CategoricalSeries project(const CategoricalSeries& series, std::span<const State> state_map);

/// C_k = sum_y P_y (T^k)_{yy} for k = 0..k_max: the stationary probability
/// of observing equal states k steps apart.
AutocorrSequence analytic_autocorr(const TransferMatrix& t, std::size_t k_max);

/// Same as analytic_autocorr but counts equality after relabeling the
/// states through state_map, i.e. the autocorrelation a projected series
/// would show.
AutocorrSequence analytic_autocorr(const TransferMatrix& t, std::size_t k_max,
                                   std::span<const State> state_map);

}  // namespace linlaw
