#pragma once

// Minute-level OHLCV exports, e.g. the CryptoDataDownload layout:
//
//   https://www.CryptoDataDownload.com          <- optional banner line
//   unix,date,symbol,open,high,low,close,Volume BTC,Volume USD
//   1641712560,2022-01-09 07:16:00,BTC/USD,41793.2,...
//
// Header names are matched case-insensitively against these aliases:
//   unix_time    unix, unix_time, unix timestamp, timestamp, time
//   date_text    date, datetime
//   symbol       symbol, pair
//   open/high/low/close   open, high, low, close
//   volume_base  volume_base, volume base, or the first "volume ..." column
//   volume_quote volume_quote, volume quote, or the second "volume ..." column
// Without a header the columns are taken in the order shown above.
// Unix times above 10^11 are read as milliseconds.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "linlaw/anomaly.hpp"

namespace linlaw {

struct OhlcvRow {
  std::int64_t unix_time = 0;
  std::string date_text;
  std::string symbol;
  double open = 0.0;
  double high = 0.0;
  double low = 0.0;
  double close = 0.0;
  double volume_base = 0.0;
  double volume_quote = 0.0;

  /// low <= min(open, close) <= max(open, close) <= high
  bool consistent() const noexcept;
};

struct IngestReport {
  std::size_t rows_read = 0;        ///< data lines seen (banner, header, blanks excluded)
  std::size_t rows_kept = 0;
  std::size_t malformed = 0;        ///< rows skipped for bad fields or close <= 0
  std::size_t ohlc_violations = 0;  ///< rows kept despite inconsistent OHLC
  std::size_t duplicates_dropped = 0;
  std::size_t gaps_detected = 0;    ///< runs of one or more missing samples
  std::size_t missing_samples = 0;
  std::int64_t cadence_seconds = 0;
  double missing_rate = 0.0;        ///< missing / expected over the covered span
};

struct ParsedCsv {
  std::vector<OhlcvRow> rows;
  IngestReport report;
};

/// Parses an OHLCV export. Up to two leading non-data lines (banner, header)
/// are skipped; malformed data rows are counted and skipped. Throws
/// NoDataRows when nothing parses.
ParsedCsv parse_csv(std::istream& in);

/// Throws UnreadableSource when the file cannot be opened.
ParsedCsv parse_csv(const std::filesystem::path& path);

struct TimeRange {
  std::optional<std::int64_t> from;  ///< inclusive
  std::optional<std::int64_t> to;    ///< inclusive
};

/// Sorts rows ascending by time, keeps the last occurrence of a repeated
/// timestamp, applies the inclusive range filter and re-indexes the kept
/// samples consecutively. Missing samples are dropped, not imputed; the
/// report counts them against the sampling cadence (the smallest positive
/// time step). Counters from `report` are carried over. Throws
/// EmptyAfterFilter when fewer than two samples remain.
std::pair<PriceSeries, IngestReport> to_price_series(std::vector<OhlcvRow> rows,
                                                     const TimeRange& range = {},
                                                     IngestReport report = {});

/// Writes a series in the header layout above so parse_csv reads it back.
/// Open, high and low repeat the close; volumes are zero.
void write_price_csv(std::ostream& out, const PriceSeries& prices,
                     const std::string& symbol = "BTC/USD");

}  // namespace linlaw
