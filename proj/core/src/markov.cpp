#include "linlaw/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "linlaw/error.hpp"
#include "linlaw/polynomial.hpp"
#include "linlaw/rng.hpp"

namespace linlaw {

namespace {

constexpr double kEquilibriumThreshold = 1e-14;
constexpr std::size_t kEquilibriumMaxIterations = 1'000'000;
constexpr double kUnitEigenvalueTolerance = 1e-9;

// Cumulative probabilities down each column, laid out column by column.
std::vector<double> cumulative_columns(const Matrix& m) {
  const std::size_t d = m.rows();
  std::vector<double> cum(d * d);
  for (std::size_t from = 0; from < d; ++from) {
    double s = 0.0;
    for (std::size_t to = 0; to < d; ++to) {
      s += m(to, from);
      cum[from * d + to] = s;
    }
  }
  return cum;
}

State sample_column(std::span<const double> cum, double u) {
  for (std::size_t to = 0; to < cum.size(); ++to)
    if (u < cum[to]) return static_cast<State>(to);
  // u landed above the rounded column total: take the last reachable state.
  for (std::size_t to = cum.size(); to-- > 0;) {
    const double below = to == 0 ? 0.0 : cum[to - 1];
    if (cum[to] > below) return static_cast<State>(to);
  }
  return static_cast<State>(cum.size() - 1);
}

}  // namespace

TransferMatrix TransferMatrix::validate(Matrix raw) {
  if (!raw.square()) {
    throw Error(ErrorCode::NotSquare, std::to_string(raw.rows()) + "x" +
                                          std::to_string(raw.cols()) + " matrix is not square");
  }
  if (raw.rows() < 2) throw Error(ErrorCode::NotSquare, "transfer matrix needs dim >= 2");
  const std::size_t d = raw.rows();
  for (std::size_t from = 0; from < d; ++from) {
    double sum = 0.0;
    for (std::size_t to = 0; to < d; ++to) {
      double& v = raw(to, from);
      if (!std::isfinite(v) || v < -kEntryTolerance || v > 1.0 + kEntryTolerance) {
        throw Error(ErrorCode::NotStochastic, "entry (" + std::to_string(to) + ", " +
                                                  std::to_string(from) + ") = " +
                                                  std::to_string(v) + " outside [0, 1]");
      }
      v = std::clamp(v, 0.0, 1.0);
      sum += v;
    }
    if (std::abs(sum - 1.0) > kColumnSumTolerance) {
      throw Error(ErrorCode::NotStochastic,
                  "column " + std::to_string(from) + " sums to " + std::to_string(sum));
    }
  }
  return TransferMatrix(std::move(raw));
}

TransferMatrix TransferMatrix::binary(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0))
    throw Error(ErrorCode::BadParameter, "p and q must lie in [0, 1]");
  return validate(Matrix{{1.0 - p, q}, {p, 1.0 - q}});
}

Matrix normalize_columns(Matrix raw) {
  for (std::size_t c = 0; c < raw.cols(); ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < raw.rows(); ++r) sum += raw(r, c);
    if (!(sum > 0.0)) throw Error(ErrorCode::NotStochastic, "column " + std::to_string(c) + " has zero mass");
    for (std::size_t r = 0; r < raw.rows(); ++r) raw(r, c) /= sum;
  }
  return raw;
}

DistributionVector equilibrium(const TransferMatrix& t) {
  const std::size_t d = t.dim();

  const auto eig = spectrum(t);
  const auto unit = std::count_if(eig.begin(), eig.end(), [](std::complex<double> l) {
    return std::abs(l - 1.0) <= kUnitEigenvalueTolerance;
  });
  if (unit > 1) {
    throw Error(ErrorCode::NonUnique,
                "eigenvalue 1 has multiplicity " + std::to_string(unit) + "; chain is reducible");
  }

  std::vector<double> p(d, 1.0 / static_cast<double>(d));
  for (std::size_t it = 0; it < kEquilibriumMaxIterations; ++it) {
    auto next = multiply(t.matrix(), p);
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    double delta = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      next[i] /= total;
      delta = std::max(delta, std::abs(next[i] - p[i]));
    }
    p = std::move(next);
    if (delta <= kEquilibriumThreshold) return DistributionVector{std::move(p)};
  }
  throw Error(ErrorCode::NonUnique, "power iteration did not converge in " +
                                        std::to_string(kEquilibriumMaxIterations) +
                                        " steps; chain is periodic or reducible");
}

std::vector<std::complex<double>> spectrum(const TransferMatrix& t) {
  const std::size_t d = t.dim();
  Eigen::MatrixXd m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = t.prob(r, c);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectrum: eigensolver failed to converge");

  std::vector<std::complex<double>> out(solver.eigenvalues().begin(), solver.eigenvalues().end());
  sort_by_modulus(out);
  return out;
}

std::vector<double> char_poly_coeffs(const TransferMatrix& t) {
  // Faddeev-LeVerrier: M_k = T M_{k-1} + c_{d-k+1} I, c_{d-k} = -tr(T M_k) / k.
  const std::size_t d = t.dim();
  const Matrix& a = t.matrix();
  std::vector<double> c(d + 1, 0.0);
  c[d] = 1.0;
  Matrix m(d, d);
  for (std::size_t k = 1; k <= d; ++k) {
    Matrix next = a * m;
    for (std::size_t i = 0; i < d; ++i) next(i, i) += c[d - k + 1];
    m = std::move(next);
    const Matrix am = a * m;
    double trace = 0.0;
    for (std::size_t i = 0; i < d; ++i) trace += am(i, i);
    c[d - k] = -trace / static_cast<double>(k);
  }
  return c;
}

CategoricalSeries simulate(const TransferMatrix& t, State x0, std::size_t n, std::uint64_t seed) {
  const std::size_t d = t.dim();
  if (x0 >= d) {
    throw Error(ErrorCode::BadInitialState,
                "initial state " + std::to_string(x0) + " outside alphabet of size " + std::to_string(d));
  }
  if (n == 0) throw Error(ErrorCode::BadParameter, "series length must be positive");

  const auto cum = cumulative_columns(t.matrix());
  UniformStream rng(seed);
  std::vector<State> states(n);
  states[0] = x0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::span<const double> column(cum.data() + states[i - 1] * d, d);
    states[i] = sample_column(column, rng.next());
  }
  return CategoricalSeries(std::move(states), d);
}

CategoricalSeries simulate_binary_langevin(double p, double q, State x0, std::size_t n,
                                           std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0))
    throw Error(ErrorCode::BadParameter, "p and q must lie in [0, 1]");
  if (x0 > 1) throw Error(ErrorCode::BadParameter, "initial state must be 0 or 1");
  if (n == 0) throw Error(ErrorCode::BadParameter, "series length must be positive");

  UniformStream rng(seed);
  const double decay = 1.0 - p - q;
  std::vector<State> states(n);
  states[0] = x0;
  for (std::size_t i = 1; i < n; ++i) {
    const double xi = 1.0 - rng.next();
    const double v = std::floor(1.0 + p - xi + decay * static_cast<double>(states[i - 1]));
    states[i] = static_cast<State>(std::clamp(v, 0.0, 1.0));
  }
  return CategoricalSeries(std::move(states), 2);
}

CategoricalSeries project(const CategoricalSeries& series, std::span<const State> state_map) {
  if (state_map.size() < series.alphabet_size()) {
    throw Error(ErrorCode::IncompleteMap, "map covers " + std::to_string(state_map.size()) +
                                              " of " + std::to_string(series.alphabet_size()) +
                                              " states");
  }
  std::vector<State> image(state_map.begin(),
                           state_map.begin() + static_cast<std::ptrdiff_t>(series.alphabet_size()));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  std::vector<State> relabel(series.alphabet_size());
  for (std::size_t s = 0; s < relabel.size(); ++s) {
    relabel[s] = static_cast<State>(
        std::lower_bound(image.begin(), image.end(), state_map[s]) - image.begin());
  }

  std::vector<State> out(series.size());
  std::transform(series.states().begin(), series.states().end(), out.begin(),
                 [&](State s) { return relabel[s]; });
  return CategoricalSeries(std::move(out), image.size());
}

AutocorrSequence analytic_autocorr(const TransferMatrix& t, std::size_t k_max) {
  std::vector<State> identity(t.dim());
  std::iota(identity.begin(), identity.end(), State{0});
  return analytic_autocorr(t, k_max, identity);
}

AutocorrSequence analytic_autocorr(const TransferMatrix& t, std::size_t k_max,
                                   std::span<const State> state_map) {
  const std::size_t d = t.dim();
  if (state_map.size() < d)
    throw Error(ErrorCode::IncompleteMap, "map does not cover every state");
  const auto eq = equilibrium(t);

  // joint(z, y) = P_y (T^k)_{zy}: column y is P_y e_y pushed k steps forward.
  Matrix joint(d, d);
  for (std::size_t y = 0; y < d; ++y) joint(y, y) = eq.probs[y];

  AutocorrSequence out;
  out.provenance = Provenance::Analytic;
  out.values.reserve(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (k > 0) joint = t.matrix() * joint;
    double c = 0.0;
    for (std::size_t z = 0; z < d; ++z)
      for (std::size_t y = 0; y < d; ++y)
        if (state_map[z] == state_map[y]) c += joint(z, y);
    out.values.push_back(c);
  }
  return out;
}

}  // namespace linlaw
