#include "linlaw/price_ingest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "linlaw/error.hpp"

namespace linlaw {

namespace {

constexpr std::int64_t kMillisecondThreshold = 100'000'000'000;  // 10^11
constexpr std::size_t kMaxPreambleLines = 2;

enum Field : std::size_t { kUnix, kDate, kSymbol, kOpen, kHigh, kLow, kClose, kVolBase, kVolQuote, kFieldCount };

constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

struct ColumnMap {
  std::array<std::size_t, kFieldCount> index{0, 1, 2, 3, 4, 5, 6, 7, 8};

  std::size_t min_fields() const {
    std::size_t m = 0;
    for (auto i : index)
      if (i != kAbsent) m = std::max(m, i + 1);
    return m;
  }
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\"");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\"");
  return s.substr(first, last - first + 1);
}

void split(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

// Recognizes a header line; returns the mapping when at least the time and
// close columns are named.
std::optional<ColumnMap> match_header(const std::vector<std::string_view>& fields) {
  ColumnMap map;
  map.index.fill(kAbsent);
  std::vector<std::size_t> volumes;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string name = lower(fields[i]);
    auto set = [&](Field f) {
      if (map.index[f] == kAbsent) map.index[f] = i;
    };
    if (name == "unix" || name == "unix time" || name == "unix timestamp" || name == "timestamp" ||
        name == "time")
      set(kUnix);
    else if (name == "date" || name == "datetime")
      set(kDate);
    else if (name == "symbol" || name == "pair")
      set(kSymbol);
    else if (name == "open")
      set(kOpen);
    else if (name == "high")
      set(kHigh);
    else if (name == "low")
      set(kLow);
    else if (name == "close")
      set(kClose);
    else if (name == "volume base")
      set(kVolBase);
    else if (name == "volume quote")
      set(kVolQuote);
    else if (name.starts_with("volume"))
      volumes.push_back(i);
  }
  for (std::size_t v : volumes) {
    if (map.index[kVolBase] == kAbsent)
      map.index[kVolBase] = v;
    else if (map.index[kVolQuote] == kAbsent)
      map.index[kVolQuote] = v;
  }
  if (map.index[kUnix] == kAbsent || map.index[kClose] == kAbsent) return std::nullopt;
  return map;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_real(const std::vector<std::string_view>& fields, std::size_t index, double& out,
                bool required) {
  if (index == kAbsent) return !required;
  if (!parse_number(fields[index], out)) return false;
  return std::isfinite(out);
}

bool parse_row(const std::vector<std::string_view>& fields, const ColumnMap& map, OhlcvRow& row) {
  if (fields.size() < map.min_fields()) return false;
  const auto& ix = map.index;

  std::int64_t t = 0;
  if (!parse_number(fields[ix[kUnix]], t)) {
    double td = 0.0;  // some exports write "1483228860.0"
    if (!parse_number(fields[ix[kUnix]], td) || !std::isfinite(td) || td != std::floor(td))
      return false;
    t = static_cast<std::int64_t>(td);
  }
  if (t > kMillisecondThreshold) t /= 1000;
  row.unix_time = t;

  row.date_text = ix[kDate] == kAbsent ? std::string() : std::string(fields[ix[kDate]]);
  row.symbol = ix[kSymbol] == kAbsent ? std::string() : std::string(fields[ix[kSymbol]]);
  if (!parse_real(fields, ix[kClose], row.close, true) || !(row.close > 0.0)) return false;
  row.open = row.high = row.low = row.close;
  row.volume_base = row.volume_quote = 0.0;
  return parse_real(fields, ix[kOpen], row.open, false) &&
         parse_real(fields, ix[kHigh], row.high, false) &&
         parse_real(fields, ix[kLow], row.low, false) &&
         parse_real(fields, ix[kVolBase], row.volume_base, false) &&
         parse_real(fields, ix[kVolQuote], row.volume_quote, false) && row.volume_base >= 0.0 &&
         row.volume_quote >= 0.0;
}

}  // namespace

bool OhlcvRow::consistent() const noexcept {
  return low <= std::min(open, close) && std::max(open, close) <= high;
}

ParsedCsv parse_csv(std::istream& in) {
  ParsedCsv out;
  ColumnMap map;
  std::vector<std::string_view> fields;
  std::string line;
  std::size_t preamble = 0;
  bool in_data = false;

  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    split(line, fields);

    if (!in_data && preamble < kMaxPreambleLines) {
      OhlcvRow probe;
      if (!parse_row(fields, map, probe)) {
        if (auto header = match_header(fields)) map = *header;
        ++preamble;
        continue;
      }
    }
    in_data = true;
    ++out.report.rows_read;

    OhlcvRow row;
    if (!parse_row(fields, map, row)) {
      ++out.report.malformed;
      continue;
    }
    if (!row.consistent()) ++out.report.ohlc_violations;
    out.rows.push_back(std::move(row));
  }
  if (in.bad()) throw Error(ErrorCode::UnreadableSource, "read error");
  if (out.rows.empty()) throw Error(ErrorCode::NoDataRows, "no parsable data rows");
  out.report.rows_kept = out.rows.size();
  return out;
}

ParsedCsv parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UnreadableSource, "cannot open " + path.string());
  return parse_csv(in);
}

std::pair<PriceSeries, IngestReport> to_price_series(std::vector<OhlcvRow> rows,
                                                     const TimeRange& range,
                                                     IngestReport report) {
  if (rows.empty()) throw Error(ErrorCode::EmptyAfterFilter, "no rows to convert");

  std::stable_sort(rows.begin(), rows.end(),
                   [](const OhlcvRow& a, const OhlcvRow& b) { return a.unix_time < b.unix_time; });

  std::vector<std::int64_t> times;
  std::vector<double> closes;
  times.reserve(rows.size());
  closes.reserve(rows.size());
  report.duplicates_dropped = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // Equal timestamps are adjacent and in input order: keep the last one.
    if (i + 1 < rows.size() && rows[i + 1].unix_time == rows[i].unix_time) {
      ++report.duplicates_dropped;
      continue;
    }
    const std::int64_t t = rows[i].unix_time;
    if ((range.from && t < *range.from) || (range.to && t > *range.to)) continue;
    times.push_back(t);
    closes.push_back(rows[i].close);
  }
  if (times.size() < 2) {
    throw Error(ErrorCode::EmptyAfterFilter,
                fmt::format("{} sample(s) left after filtering; need at least 2", times.size()));
  }

  std::int64_t cadence = 0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    const std::int64_t dt = times[i] - times[i - 1];
    cadence = cadence == 0 ? dt : std::min(cadence, dt);
  }
  report.cadence_seconds = cadence;
  report.gaps_detected = 0;
  report.missing_samples = 0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    const std::int64_t steps = (times[i] - times[i - 1]) / cadence;
    if (steps > 1) {
      ++report.gaps_detected;
      report.missing_samples += static_cast<std::size_t>(steps - 1);
    }
  }
  report.rows_kept = times.size();
  report.missing_rate = static_cast<double>(report.missing_samples) /
                        static_cast<double>(report.missing_samples + times.size());

  return {PriceSeries(std::move(times), std::move(closes)), report};
}

void write_price_csv(std::ostream& out, const PriceSeries& prices, const std::string& symbol) {
  out << "unix,date,symbol,open,high,low,close,Volume BTC,Volume USD\n";
  const auto ts = prices.timestamps();
  const auto closes = prices.closes();
  std::string buf;
  for (std::size_t i = 0; i < prices.size(); ++i) {
    buf.clear();
    fmt::format_to(std::back_inserter(buf), "{},,{},{},{},{},{},0,0\n", ts[i], symbol, closes[i],
                   closes[i], closes[i], closes[i]);
    out << buf;
  }
}

}  // namespace linlaw
