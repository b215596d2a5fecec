#pragma once

// Linear laws of an autocorrelation sequence.
//
// A sequence that is a sum of d geometric terms obeys a fixed recurrence
// sum_a w_a C_{k+a} = 0 whose characteristic roots are the geometric ratios.
// Stacking shifted copies of C into the Hankel matrix F (F[k][a] = C[k + a])
// turns the recurrence into F w = 0, so w spans the null space of F^T F and
// the number of non-negligible Gram eigenvalues counts the geometric terms.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "linlaw/matrix.hpp"
#include "linlaw/series.hpp"

namespace linlaw {

/// Relative threshold below which a Gram eigenvalue counts as zero.
inline constexpr double kNullThreshold = 1e-12;

struct EmbeddingConfig {
  std::size_t lags = 20;  ///< rows of the embedding, lag offsets 0..lags-1
  std::size_t order = 5;  ///< columns, i.e. number of law coefficients

  /// Throws BadConfig unless lags >= order >= 2.
  void validate() const;

  /// Largest lag the embedding reads.
  std::size_t required_k_max() const noexcept { return lags + order - 2; }
};

/// Fraction of equal pairs k steps apart, for k = 0..k_max.
/// Throws SeriesTooShort if k_max >= number of samples.
AutocorrSequence estimate_autocorr(std::span<const State> states, std::size_t k_max);
AutocorrSequence estimate_autocorr(const CategoricalSeries& series, std::size_t k_max);

/// Hankel matrix F[k][a] = C[k + a], lags x order. Throws InsufficientLags.
Matrix build_embedding(const AutocorrSequence& c, const EmbeddingConfig& cfg);

/// F^T F, computed on the upper triangle and mirrored so it is exactly symmetric.
Matrix gram(const Matrix& f);

struct GramSpectrum {
  std::vector<double> eigenvalues;  ///< descending, nonnegative
  std::vector<double> normalized;   ///< eigenvalues / eigenvalues[0], zeros if that is 0
  Matrix eigenvectors;              ///< orthonormal columns paired with eigenvalues

  std::size_t order() const noexcept { return eigenvalues.size(); }
};

/// Symmetric eigendecomposition of a Gram matrix.
///
/// Throws NotSymmetric when G deviates from its transpose by more than
/// 1e-12 of its largest entry, and IndefiniteBeyondTolerance when an
/// eigenvalue is below -1e-10 of the spectral norm. Smaller negative
/// round-off is clamped to zero.
GramSpectrum gram_spectrum(const Matrix& g);

/// estimate/analytic C -> embedding -> Gram -> spectrum in one call.
GramSpectrum embed_and_decompose(const AutocorrSequence& c, const EmbeddingConfig& cfg);

struct LinearLaw {
  std::vector<double> coeffs;  ///< w_a in ascending powers; unit norm, last nonzero positive
  double residual = 0.0;       ///< smallest Gram eigenvalue
  std::vector<std::complex<double>> roots;
};

/// The law is the eigenvector of the smallest Gram eigenvalue. Throws
/// DegenerateNullspace when the two smallest eigenvalues agree within
/// kNullThreshold of the largest, since the law order is then ambiguous.
LinearLaw extract_law(const GramSpectrum& spectrum);

/// Third-largest normalized eigenvalue. Throws OrderTooSmall for order < 3.
double excess_rank_score(const GramSpectrum& spectrum);

}  // namespace linlaw
