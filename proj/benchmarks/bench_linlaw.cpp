#include <deque>
#include <random>
#include <sstream>

#include <benchmark/benchmark.h>

#include "linlaw/anomaly.hpp"
#include "linlaw/linear_law.hpp"
#include "linlaw/price_ingest.hpp"
#include "linlaw/reference_chains.hpp"
#include "linlaw/symmetric_eigen.hpp"

using namespace linlaw;

namespace {

const CategoricalSeries& chain_x(std::size_t n) {
  static const auto series = simulate(reference_chain_x(), kChainXInitial, 1'000'000, 42);
  static std::deque<CategoricalSeries> cache;
  for (const auto& s : cache)
    if (s.size() == n) return s;
  std::vector<State> head(series.states().begin(), series.states().begin() + n);
  return cache.emplace_back(std::move(head), 2);
}

}  // namespace

static void BM_Simulate(benchmark::State& state) {
  const auto t = reference_chain_y();
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate(t, kChainYInitial, state.range(0), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(30'000)->Arg(1'000'000);

static void BM_EstimateAutocorr(benchmark::State& state) {
  const auto& x = chain_x(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_autocorr(x, 23));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateAutocorr)->Arg(30'000)->Arg(1'000'000);

static void BM_JacobiEigen(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = g(rng);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigen(m));
}
BENCHMARK(BM_JacobiEigen)->Arg(3)->Arg(5)->Arg(10);

static void BM_EmbedAndDecompose(benchmark::State& state) {
  const auto c = estimate_autocorr(chain_x(30'000), 23);
  for (auto _ : state) benchmark::DoNotOptimize(embed_and_decompose(c, {20, 5}));
}
BENCHMARK(BM_EmbedAndDecompose);

static void BM_Scan(benchmark::State& state) {
  const auto& x = chain_x(1'000'000);
  const ScanConfig cfg{30'000, 0, {20, 5}, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(scan(x.states(), cfg));
  state.SetItemsProcessed(state.iterations() * x.size());
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ParseCsv(benchmark::State& state) {
  std::ostringstream text;
  text << "unix,date,symbol,open,high,low,close,Volume BTC,Volume USD\n";
  for (std::int64_t i = 0; i < state.range(0); ++i)
    text << 1483228860 + 60 * i << ",2017-01-01 00:01:00,BTC/USD,997.5,998.5,996.5,"
         << 997.5 + (i % 7) << ",1.5,1496.25\n";
  const std::string csv = text.str();
  for (auto _ : state) {
    std::istringstream in(csv);
    benchmark::DoNotOptimize(parse_csv(in));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ParseCsv)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
