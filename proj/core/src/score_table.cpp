#include "linlaw/score_table.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>

#include "linlaw/error.hpp"
#include "linlaw/time_format.hpp"

namespace linlaw {

namespace {

std::string time_field(const std::optional<std::int64_t>& t) {
  return t ? format_iso8601_utc(*t) : std::string();
}

nlohmann::ordered_json time_json(const std::optional<std::int64_t>& t) {
  return t ? nlohmann::ordered_json(format_iso8601_utc(*t)) : nlohmann::ordered_json(nullptr);
}

}  // namespace

ScoreTable score_table(std::span<const WindowScore> scores) {
  if (scores.empty()) throw Error(ErrorCode::EmptyInput, "no windows to tabulate");
  const std::size_t n = scores.front().spectrum.size();
  for (const auto& w : scores)
    if (w.spectrum.size() != n)
      throw Error(ErrorCode::BadParameter, "windows disagree on spectrum length");

  ScoreTable table;
  table.columns = {"window_index", "start_time", "end_time", "score"};
  for (std::size_t i = 1; i <= n; ++i) table.columns.push_back(fmt::format("lambda_{}", i));
  table.columns.insert(table.columns.end(), {"start_index", "end_index", "degenerate"});

  table.rows.assign(scores.begin(), scores.end());
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const WindowScore& a, const WindowScore& b) {
                     return a.window_index < b.window_index;
                   });
  return table;
}

void write_csv(std::ostream& out, const ScoreTable& table) {
  out << fmt::format("{}\n", fmt::join(table.columns, ","));
  for (const auto& w : table.rows) {
    std::string line = fmt::format("{},{},{},{}", w.window_index, time_field(w.start_time),
                                   time_field(w.end_time), w.score);
    for (double v : w.spectrum) line += fmt::format(",{}", v);
    line += fmt::format(",{},{},{}\n", w.start_t, w.end_t, w.degenerate ? 1 : 0);
    out << line;
  }
}

void write_jsonl(std::ostream& out, const ScoreTable& table) {
  for (const auto& w : table.rows) {
    nlohmann::ordered_json row;
    row["window_index"] = w.window_index;
    row["start_time"] = time_json(w.start_time);
    row["end_time"] = time_json(w.end_time);
    row["score"] = w.score;
    row["spectrum"] = w.spectrum;
    row["start_index"] = w.start_t;
    row["end_index"] = w.end_t;
    row["degenerate"] = w.degenerate;
    out << row.dump() << '\n';
  }
}

}  // namespace linlaw
