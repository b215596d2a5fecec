#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "linlaw/error.hpp"
#include "linlaw/markov.hpp"
#include "linlaw/polynomial.hpp"
#include "linlaw/reference_chains.hpp"
#include "oracles.hpp"

using namespace linlaw;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no linlaw::Error thrown";
  return ErrorCode::ParseError;
}

const std::vector<double> kGrid{0.1, 0.3, 0.5, 0.7, 0.9};

}  // namespace

// =============================================================================
// validate_transfer
// =============================================================================

TEST(ValidateTransfer, AcceptsReferenceTwoStateChain) {
  const auto t = TransferMatrix::validate(reference_matrix_x());
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_DOUBLE_EQ(t.prob(1, 0), kChainXp);
  EXPECT_DOUBLE_EQ(t.prob(0, 1), kChainXq);
}

TEST(ValidateTransfer, AcceptsIdentity) {
  EXPECT_NO_THROW(TransferMatrix::validate(Matrix::identity(2)));
}

TEST(ValidateTransfer, RejectsColumnSumAboveOne) {
  EXPECT_EQ(code_of([] { TransferMatrix::validate(Matrix{{0.5, 0.5}, {0.6, 0.5}}); }),
            ErrorCode::NotStochastic);
}

TEST(ValidateTransfer, RejectsNegativeEntry) {
  EXPECT_EQ(code_of([] { TransferMatrix::validate(Matrix{{1.2, 0.5}, {-0.2, 0.5}}); }),
            ErrorCode::NotStochastic);
}

TEST(ValidateTransfer, RejectsNonSquareAndTiny) {
  EXPECT_EQ(code_of([] { TransferMatrix::validate(Matrix(2, 3, 0.5)); }), ErrorCode::NotSquare);
  EXPECT_EQ(code_of([] { TransferMatrix::validate(Matrix{{1.0}}); }), ErrorCode::NotSquare);
}

TEST(ValidateTransfer, PublishedFourStateMatrixNeedsNormalization) {
  // Third column sums to 0.9999.
  EXPECT_EQ(code_of([] { TransferMatrix::validate(reference_matrix_y_raw()); }),
            ErrorCode::NotStochastic);
  const auto t = reference_chain_y();
  for (std::size_t c = 0; c < 4; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < 4; ++r) s += t.prob(r, c);
    EXPECT_NEAR(s, 1.0, 1e-15);
  }
}

// =============================================================================
// equilibrium
// =============================================================================

TEST(Equilibrium, BinaryClosedForm) {
  for (double p : kGrid)
    for (double q : kGrid) {
      const auto eq = equilibrium(TransferMatrix::binary(p, q));
      EXPECT_NEAR(eq.probs[0], q / (p + q), 1e-12);
      EXPECT_NEAR(eq.probs[1], p / (p + q), 1e-12);
    }
}

TEST(Equilibrium, ReferenceChainX) {
  // q / (p + q) and p / (p + q) at 40 digits.
  const auto eq = equilibrium(reference_chain_x());
  EXPECT_NEAR(eq.probs[0], 0.5040980345348929737, 1e-12);
  EXPECT_NEAR(eq.probs[1], 0.4959019654651070263, 1e-12);
}

TEST(Equilibrium, IdentityIsNotUnique) {
  EXPECT_EQ(code_of([] { equilibrium(TransferMatrix::validate(Matrix::identity(2))); }),
            ErrorCode::NonUnique);
}

TEST(Equilibrium, PeriodicChainFromNonUniformFixedPoint) {
  // Period-3 cycle: the uniform start is already stationary.
  const auto t = TransferMatrix::validate(Matrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  const auto eq = equilibrium(t);
  for (double v : eq.probs) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
}

TEST(Equilibrium, MatchesKernelOracleOnRandomChains) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 5;
    const Matrix m = oracle::random_stochastic(d, rng);
    const auto eq = equilibrium(TransferMatrix::validate(m));
    const auto ref = oracle::kernel_equilibrium(m);
    for (std::size_t i = 0; i < d; ++i) EXPECT_NEAR(eq.probs[i], ref[i], 1e-12);
    EXPECT_NEAR(std::accumulate(eq.probs.begin(), eq.probs.end(), 0.0), 1.0, 1e-12);
  }
}

// =============================================================================
// spectrum / char_poly_coeffs
// =============================================================================

TEST(Spectrum, BinaryEigenvalues) {
  const auto eig = spectrum(reference_chain_x());
  ASSERT_EQ(eig.size(), 2u);
  EXPECT_NEAR(eig[0].real(), 1.0, 1e-12);
  EXPECT_NEAR(eig[1].real(), -0.2567, 1e-12);
  EXPECT_EQ(eig[1].imag(), 0.0);
}

TEST(Spectrum, FourStateReference) {
  // mpmath eigenvalues of the column-normalized published matrix.
  const auto eig = spectrum(reference_chain_y());
  ASSERT_EQ(eig.size(), 4u);
  const double expected[] = {1.0, 0.40373712151841107587, -0.27962519616616936005,
                             0.13234997083737724607};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(eig[i].real(), expected[i], 1e-9) << i;
    EXPECT_NEAR(eig[i].imag(), 0.0, 1e-12) << i;
  }
}

TEST(Spectrum, TieBreakingIsDeterministic) {
  // Rotation-like cycle: eigenvalues are the cube roots of unity.
  const auto eig = spectrum(TransferMatrix::validate(Matrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  ASSERT_EQ(eig.size(), 3u);
  EXPECT_NEAR(eig[0].real(), 1.0, 1e-12);
  EXPECT_NEAR(eig[1].real(), -0.5, 1e-12);
  EXPECT_GT(eig[1].imag(), 0.0);
  EXPECT_LT(eig[2].imag(), 0.0);
}

TEST(Spectrum, ContainsOneAndStaysInUnitDisk) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto eig = spectrum(TransferMatrix::validate(oracle::random_stochastic(2 + trial % 4, rng)));
    const bool has_one = std::any_of(eig.begin(), eig.end(),
                                     [](auto l) { return std::abs(l - 1.0) <= 1e-9; });
    EXPECT_TRUE(has_one);
    for (auto l : eig) EXPECT_LE(std::abs(l), 1.0 + 1e-9);
  }
}

TEST(CharPoly, BinaryCoefficients) {
  for (double p : kGrid)
    for (double q : kGrid) {
      const auto c = char_poly_coeffs(TransferMatrix::binary(p, q));
      ASSERT_EQ(c.size(), 3u);
      EXPECT_NEAR(c[0], 1.0 - p - q, 1e-12);
      EXPECT_NEAR(c[1], -(2.0 - p - q), 1e-12);
      EXPECT_EQ(c[2], 1.0);
    }
}

TEST(CharPoly, ReferenceChainX) {
  const auto c = char_poly_coeffs(reference_chain_x());
  EXPECT_NEAR(c[0], -0.2567, 1e-12);
  EXPECT_NEAR(c[1], -0.7433, 1e-12);  // -(2 - p - q)
  EXPECT_EQ(c[2], 1.0);
}

TEST(CharPoly, Identity) {
  const auto c = char_poly_coeffs(TransferMatrix::validate(Matrix::identity(2)));
  EXPECT_EQ(c, (std::vector<double>{1.0, -2.0, 1.0}));
}

TEST(CharPoly, VanishesOnSpectrum) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = TransferMatrix::validate(oracle::random_stochastic(2 + trial % 5, rng));
    const auto c = char_poly_coeffs(t);
    for (auto l : spectrum(t)) EXPECT_LE(std::abs(evaluate(c, l)), 1e-8);
  }
}

TEST(MatrixPowers, ColumnSumsStayOne) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix t = oracle::random_stochastic(2 + trial % 4, rng);
    Matrix power = t;
    for (int k = 1; k <= 64; ++k) {
      for (std::size_t c = 0; c < t.cols(); ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < t.rows(); ++r) s += power(r, c);
        ASSERT_NEAR(s, 1.0, k * 1e-12) << "k=" << k;
      }
      power = t * power;
    }
  }
}

// =============================================================================
// simulate / simulate_binary_langevin
// =============================================================================

TEST(Simulate, DeterministicAlternation) {
  const auto s = simulate(TransferMatrix::binary(1.0, 1.0), 0, 5, 1);
  EXPECT_EQ(std::vector<State>(s.states().begin(), s.states().end()),
            (std::vector<State>{0, 1, 0, 1, 0}));
}

TEST(Simulate, AbsorbingState) {
  const auto s = simulate(TransferMatrix::validate(Matrix::identity(2)), 1, 4, 9);
  EXPECT_EQ(std::vector<State>(s.states().begin(), s.states().end()),
            (std::vector<State>{1, 1, 1, 1}));
}

TEST(Simulate, SameSeedSamePath) {
  const auto t = reference_chain_y();
  EXPECT_EQ(simulate(t, 2, 10'000, 99), simulate(t, 2, 10'000, 99));
  EXPECT_NE(simulate(t, 2, 10'000, 99), simulate(t, 2, 10'000, 100));
}

TEST(Simulate, FirstStateIsInitialState) {
  const auto s = simulate(reference_chain_y(), 3, 1, 0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], 3u);
}

TEST(Simulate, RejectsBadInitialState) {
  EXPECT_EQ(code_of([] { simulate(reference_chain_x(), 2, 10, 0); }), ErrorCode::BadInitialState);
}

TEST(Simulate, TransitionFrequenciesConverge) {
  constexpr std::size_t n = 1'000'000;
  const auto t = reference_chain_x();
  const auto s = simulate(t, 0, n, 2024);
  const Matrix counts = oracle::transition_counts(s.states(), 2);
  double worst = 0.0;
  for (std::size_t from = 0; from < 2; ++from) {
    const double total = counts(0, from) + counts(1, from);
    for (std::size_t to = 0; to < 2; ++to) {
      const double p = t.prob(to, from);
      const double est = counts(to, from) / total;
      // 3 sigma binomial bound on each column's transition probability.
      EXPECT_LE(std::abs(est - p), 3.0 * std::sqrt(p * (1.0 - p) / total));
      worst = std::max(worst, std::abs(est - p));
    }
  }
  EXPECT_LE(worst, 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST(Simulate, FourStateTransitionMatrixConverges) {
  constexpr std::size_t n = 1'000'000;
  const auto t = reference_chain_y();
  const auto s = simulate(t, kChainYInitial, n, 77);
  const Matrix counts = oracle::transition_counts(s.states(), 4);
  for (std::size_t from = 0; from < 4; ++from) {
    double total = 0.0;
    for (std::size_t to = 0; to < 4; ++to) total += counts(to, from);
    for (std::size_t to = 0; to < 4; ++to)
      EXPECT_LE(std::abs(counts(to, from) / total - t.prob(to, from)),
                5.0 / std::sqrt(static_cast<double>(n)));
  }
}

TEST(Langevin, ForcedFlipsAndFrozenChain) {
  const auto flips = simulate_binary_langevin(1.0, 1.0, 0, 6, 5);
  EXPECT_EQ(std::vector<State>(flips.states().begin(), flips.states().end()),
            (std::vector<State>{0, 1, 0, 1, 0, 1}));
  const auto frozen = simulate_binary_langevin(0.0, 0.0, 1, 6, 5);
  EXPECT_TRUE(std::all_of(frozen.states().begin(), frozen.states().end(), [](State s) { return s == 1; }));
}

TEST(Langevin, RejectsBadParameters) {
  EXPECT_EQ(code_of([] { simulate_binary_langevin(1.5, 0.2, 0, 4, 0); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { simulate_binary_langevin(0.5, 0.2, 2, 4, 0); }), ErrorCode::BadParameter);
}

TEST(Langevin, MatchesInverseCdfSamplerPathForPath) {
  for (double p : kGrid)
    for (double q : kGrid)
      for (std::uint64_t seed : {1u, 2u}) {
        const auto a = simulate(TransferMatrix::binary(p, q), 0, 20'000, seed);
        const auto b = simulate_binary_langevin(p, q, 0, 20'000, seed);
        EXPECT_EQ(a, b) << "p=" << p << " q=" << q;
      }
}

TEST(Langevin, ReproducesFlipBackProbability) {
  constexpr std::size_t n = 1'000'000;
  const auto s = simulate_binary_langevin(kChainXp, kChainXq, 0, n, 31);
  const Matrix counts = oracle::transition_counts(s.states(), 2);
  const double from_one = counts(0, 1) + counts(1, 1);
  const double est = counts(0, 1) / from_one;
  EXPECT_LE(std::abs(est - kChainXq), 3.0 * std::sqrt(kChainXq * (1 - kChainXq) / from_one));
}

// =============================================================================
// project
// =============================================================================

TEST(Project, LeftBit) {
  const CategoricalSeries s({0, 2, 1, 3}, 4);
  const auto z = project(s, kLeftBitMap);
  EXPECT_EQ(z, CategoricalSeries({0, 0, 1, 1}, 2));
}

TEST(Project, IdentityAndConstantMaps) {
  const CategoricalSeries s({0, 2, 1, 3, 3}, 4);
  const std::vector<State> id{0, 1, 2, 3}, constant{7, 7, 7, 7};
  EXPECT_EQ(project(s, id), s);
  const auto c = project(s, constant);
  EXPECT_EQ(c.size(), s.size());
  EXPECT_EQ(c.alphabet_size(), 1u);
  EXPECT_TRUE(std::all_of(c.states().begin(), c.states().end(), [](State v) { return v == 0; }));
}

TEST(Project, IncompleteMap) {
  const CategoricalSeries s({0, 3}, 4);
  const std::vector<State> partial{0, 1};
  EXPECT_EQ(code_of([&] { project(s, partial); }), ErrorCode::IncompleteMap);
}

// =============================================================================
// analytic_autocorr
// =============================================================================

TEST(AnalyticAutocorr, LagZeroIsOne) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = analytic_autocorr(TransferMatrix::validate(oracle::random_stochastic(2 + trial % 4, rng)), 3);
    EXPECT_NEAR(c.values[0], 1.0, 1e-14);
    EXPECT_EQ(c.provenance, Provenance::Analytic);
  }
}

TEST(AnalyticAutocorr, ReferenceChainLagOne) {
  const auto c = analytic_autocorr(reference_chain_x(), 24);
  ASSERT_EQ(c.values.size(), 25u);
  EXPECT_NEAR(c.values[1], 0.3716922097557093976, 1e-12);
  EXPECT_NEAR(c.values[2], 0.5329788195114187953, 1e-12);
  EXPECT_NEAR(c.values[24], 0.5000335877741017018, 1e-12);
}

TEST(AnalyticAutocorr, BinaryClosedFormOnGrid) {
  for (double p : kGrid)
    for (double q : kGrid) {
      const auto c = analytic_autocorr(TransferMatrix::binary(p, q), 50);
      for (std::size_t k = 0; k <= 50; ++k)
        ASSERT_NEAR(c.values[k], oracle::binary_autocorr(p, q, k), 1e-12) << p << " " << q << " " << k;
    }
}

TEST(AnalyticAutocorr, MatchesSpectralFormForProjectedChain) {
  const auto t = reference_chain_y();
  const auto ref = oracle::spectral_autocorr(t.matrix(), kLeftBitMap);
  const auto c = analytic_autocorr(t, 30, kLeftBitMap);
  for (std::size_t k = 0; k <= 30; ++k) EXPECT_NEAR(c.values[k], ref.at(k), 1e-12) << k;
  for (double v : c.values) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0 + 1e-15);
  }
}

TEST(AnalyticAutocorr, ReducibleChainFails) {
  EXPECT_EQ(code_of([] { analytic_autocorr(TransferMatrix::validate(Matrix::identity(3)), 4); }),
            ErrorCode::NonUnique);
}
