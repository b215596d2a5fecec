#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linlaw/linear_law.hpp"
#include "linlaw/series.hpp"

namespace linlaw {

/// Closing prices on strictly increasing epoch-second timestamps.
class PriceSeries {
public:
  /// Throws TooShort for fewer than two samples, BadParameter for mismatched
  /// lengths, non-increasing timestamps or non-positive prices.
  PriceSeries(std::vector<std::int64_t> timestamps, std::vector<double> closes);

  std::size_t size() const noexcept { return closes_.size(); }
  std::span<const std::int64_t> timestamps() const noexcept { return timestamps_; }
  std::span<const double> closes() const noexcept { return closes_; }

  friend bool operator==(const PriceSeries&, const PriceSeries&) = default;

private:
  std::vector<std::int64_t> timestamps_;
  std::vector<double> closes_;
};

/// Up/down series: element t - 1 is 1 when close[t] >= close[t - 1], else 0.
/// Output has one element fewer than the input.
CategoricalSeries binarize(const PriceSeries& prices);

/// Timestamps aligned with binarize(): the time of the later close of each pair.
std::vector<std::int64_t> movement_times(const PriceSeries& prices);

struct ScanConfig {
  std::size_t width = 30'000;
  std::size_t stride = 0;  ///< 0 means stride = width (non-overlapping windows)
  EmbeddingConfig embedding{};
  unsigned threads = 0;  ///< 0 picks std::thread::hardware_concurrency()

  std::size_t effective_stride() const noexcept { return stride == 0 ? width : stride; }
};

struct WindowScore {
  std::size_t window_index = 0;
  std::size_t start_t = 0;  ///< inclusive index into the scanned series
  std::size_t end_t = 0;    ///< inclusive
  std::optional<std::int64_t> start_time;
  std::optional<std::int64_t> end_time;
  std::vector<double> spectrum;  ///< normalized Gram eigenvalues, descending
  double score = 0.0;            ///< spectrum[2], or 0 for degenerate windows
  bool degenerate = false;       ///< Gram rank below 3 (e.g. a constant window)
};

/// Scores one window of samples.
WindowScore score_window(std::span<const State> window, const EmbeddingConfig& cfg);

/// Scores windows at offsets 0, stride, 2 stride, ... while a full window
/// fits; a trailing partial window is dropped. `times`, when given, must be
/// aligned with `series` and fills the window start/end times.
///
/// Windows are evaluated independently, possibly on several threads; the
/// result is always ordered by window_index and independent of the thread
/// count. Throws WindowTooSmall when width < lags + order, BadConfig when
/// `times` has the wrong length, EmptyScan when no window fits.
std::vector<WindowScore> scan(std::span<const State> series, const ScanConfig& cfg,
                              std::span<const std::int64_t> times = {});

}  // namespace linlaw
