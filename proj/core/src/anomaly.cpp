#include "linlaw/anomaly.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "linlaw/error.hpp"

namespace linlaw {

PriceSeries::PriceSeries(std::vector<std::int64_t> timestamps, std::vector<double> closes)
    : timestamps_(std::move(timestamps)), closes_(std::move(closes)) {
  if (timestamps_.size() != closes_.size())
    throw Error(ErrorCode::BadParameter, "timestamps and closes differ in length");
  if (closes_.size() < 2)
    throw Error(ErrorCode::TooShort, "price series needs at least two samples");
  for (std::size_t i = 0; i < closes_.size(); ++i) {
    if (!(closes_[i] > 0.0))
      throw Error(ErrorCode::BadParameter, "non-positive close at sample " + std::to_string(i));
    if (i > 0 && timestamps_[i] <= timestamps_[i - 1])
      throw Error(ErrorCode::BadParameter,
                  "timestamps not strictly increasing at sample " + std::to_string(i));
  }
}

CategoricalSeries binarize(const PriceSeries& prices) {
  const auto closes = prices.closes();
  if (closes.size() < 2) throw Error(ErrorCode::TooShort, "need at least two prices");
  std::vector<State> up(closes.size() - 1);
  for (std::size_t t = 1; t < closes.size(); ++t)
    up[t - 1] = closes[t] - closes[t - 1] >= 0.0 ? 1 : 0;
  return CategoricalSeries(std::move(up), 2);
}

std::vector<std::int64_t> movement_times(const PriceSeries& prices) {
  const auto ts = prices.timestamps();
  return {ts.begin() + 1, ts.end()};
}

WindowScore score_window(std::span<const State> window, const EmbeddingConfig& cfg) {
  const auto c = estimate_autocorr(window, cfg.required_k_max());
  const auto spec = embed_and_decompose(c, cfg);

  WindowScore out;
  out.start_t = 0;
  out.end_t = window.size() - 1;
  out.spectrum = spec.normalized;
  out.degenerate = spec.eigenvalues[0] == 0.0 || spec.normalized[2] <= kNullThreshold;
  out.score = out.degenerate ? 0.0 : excess_rank_score(spec);
  return out;
}

std::vector<WindowScore> scan(std::span<const State> series, const ScanConfig& cfg,
                              std::span<const std::int64_t> times) {
  cfg.embedding.validate();
  if (cfg.embedding.order < 3)
    throw Error(ErrorCode::OrderTooSmall, "scan scores the third eigenvalue; order must be >= 3");
  const std::size_t width = cfg.width;
  if (width < cfg.embedding.lags + cfg.embedding.order) {
    throw Error(ErrorCode::WindowTooSmall,
                "window width " + std::to_string(width) + " below lags + order = " +
                    std::to_string(cfg.embedding.lags + cfg.embedding.order));
  }
  if (!times.empty() && times.size() != series.size())
    throw Error(ErrorCode::BadConfig, "timestamps not aligned with the series");
  if (series.size() < width) {
    throw Error(ErrorCode::EmptyScan, "series of " + std::to_string(series.size()) +
                                          " samples holds no window of width " +
                                          std::to_string(width));
  }

  const std::size_t stride = cfg.effective_stride();
  const std::size_t count = (series.size() - width) / stride + 1;
  std::vector<WindowScore> out(count);

  auto evaluate = [&](std::size_t i) {
    const std::size_t start = i * stride;
    WindowScore w = score_window(series.subspan(start, width), cfg.embedding);
    w.window_index = i;
    w.start_t = start;
    w.end_t = start + width - 1;
    if (!times.empty()) {
      w.start_time = times[w.start_t];
      w.end_time = times[w.end_t];
    }
    out[i] = std::move(w);
  };

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) evaluate(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            evaluate(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace linlaw
