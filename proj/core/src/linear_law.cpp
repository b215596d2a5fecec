#include "linlaw/linear_law.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linlaw/error.hpp"
#include "linlaw/polynomial.hpp"
#include "linlaw/symmetric_eigen.hpp"

namespace linlaw {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kNegativeTolerance = 1e-10;
// Coefficients smaller than this (on a unit-norm vector) do not decide the sign.
constexpr double kSignPivotTolerance = 1e-12;

}  // namespace

void EmbeddingConfig::validate() const {
  if (order < 2 || lags < order) {
    throw Error(ErrorCode::BadConfig, "embedding needs lags >= order >= 2 (lags=" +
                                          std::to_string(lags) + ", order=" +
                                          std::to_string(order) + ")");
  }
}

AutocorrSequence estimate_autocorr(std::span<const State> states, std::size_t k_max) {
  const std::size_t n = states.size();
  if (k_max >= n) {
    throw Error(ErrorCode::SeriesTooShort, "need more than " + std::to_string(k_max) +
                                               " samples, got " + std::to_string(n));
  }
  AutocorrSequence out;
  out.provenance = Provenance::Empirical;
  out.values.resize(k_max + 1);
  out.values[0] = 1.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t pairs = n - k;
    std::size_t equal = 0;
    for (std::size_t t = 0; t < pairs; ++t) equal += states[t] == states[t + k];
    out.values[k] = static_cast<double>(equal) / static_cast<double>(pairs);
  }
  return out;
}

AutocorrSequence estimate_autocorr(const CategoricalSeries& series, std::size_t k_max) {
  return estimate_autocorr(series.states(), k_max);
}

Matrix build_embedding(const AutocorrSequence& c, const EmbeddingConfig& cfg) {
  cfg.validate();
  if (c.values.size() < cfg.required_k_max() + 1) {
    throw Error(ErrorCode::InsufficientLags,
                "embedding " + std::to_string(cfg.lags) + "x" + std::to_string(cfg.order) +
                    " needs lags up to " + std::to_string(cfg.required_k_max()) + ", have " +
                    std::to_string(c.values.size()) + " values");
  }
  Matrix f(cfg.lags, cfg.order);
  for (std::size_t k = 0; k < cfg.lags; ++k)
    for (std::size_t a = 0; a < cfg.order; ++a) f(k, a) = c.values[k + a];
  return f;
}

Matrix gram(const Matrix& f) {
  const std::size_t n = f.cols();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < f.rows(); ++k) s += f(k, i) * f(k, j);
      g(i, j) = g(j, i) = s;
    }
  }
  return g;
}

GramSpectrum gram_spectrum(const Matrix& g) {
  if (!g.square()) throw Error(ErrorCode::NotSymmetric, "Gram matrix must be square");
  const double scale = g.max_abs();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      if (std::abs(g(i, j) - g(j, i)) > kSymmetryTolerance * scale) {
        throw Error(ErrorCode::NotSymmetric,
                    "entries (" + std::to_string(i) + ", " + std::to_string(j) + ") differ");
      }

  auto eig = jacobi_eigen(g);
  double norm = 0.0;
  for (double v : eig.values) norm = std::max(norm, std::abs(v));
  for (double& v : eig.values) {
    if (v < -kNegativeTolerance * norm) {
      throw Error(ErrorCode::IndefiniteBeyondTolerance,
                  "eigenvalue " + std::to_string(v) + " is negative beyond round-off");
    }
    v = std::max(v, 0.0);
  }

  GramSpectrum out;
  out.normalized.assign(eig.values.size(), 0.0);
  if (!eig.values.empty() && eig.values[0] > 0.0) {
    for (std::size_t i = 0; i < eig.values.size(); ++i)
      out.normalized[i] = eig.values[i] / eig.values[0];
  }
  out.eigenvalues = std::move(eig.values);
  out.eigenvectors = std::move(eig.vectors);
  return out;
}

GramSpectrum embed_and_decompose(const AutocorrSequence& c, const EmbeddingConfig& cfg) {
  return gram_spectrum(gram(build_embedding(c, cfg)));
}

LinearLaw extract_law(const GramSpectrum& spectrum) {
  const std::size_t n = spectrum.order();
  if (n < 2) throw Error(ErrorCode::OrderTooSmall, "a law needs at least two coefficients");

  const auto& ev = spectrum.eigenvalues;
  if (ev[n - 2] - ev[n - 1] <= kNullThreshold * ev[0]) {
    throw Error(ErrorCode::DegenerateNullspace,
                "two smallest Gram eigenvalues coincide; law order is ambiguous");
  }

  LinearLaw law;
  law.coeffs.resize(n);
  double norm = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    law.coeffs[a] = spectrum.eigenvectors(a, n - 1);
    norm += law.coeffs[a] * law.coeffs[a];
  }
  norm = std::sqrt(norm);
  for (double& w : law.coeffs) w /= norm;

  auto pivot = std::find_if(law.coeffs.rbegin(), law.coeffs.rend(),
                            [](double w) { return std::abs(w) > kSignPivotTolerance; });
  if (pivot != law.coeffs.rend() && *pivot < 0.0)
    for (double& w : law.coeffs) w = -w;

  law.residual = ev[n - 1];
  law.roots = polynomial_roots(law.coeffs);
  return law;
}

double excess_rank_score(const GramSpectrum& spectrum) {
  if (spectrum.order() < 3)
    throw Error(ErrorCode::OrderTooSmall, "excess-rank score needs order >= 3");
  return std::clamp(spectrum.normalized[2], 0.0, 1.0);
}

}  // namespace linlaw
