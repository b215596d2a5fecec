#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "linlaw/anomaly.hpp"

namespace linlaw {

/// One row per scanned window.
///
/// Column order: window_index, start_time, end_time, score, lambda_1 ..
/// lambda_n, start_index, end_index, degenerate. Times are ISO-8601 UTC and
/// left empty (CSV) or null (JSON) when the scan had no timestamps.
struct ScoreTable {
  std::vector<std::string> columns;
  std::vector<WindowScore> rows;
};

/// Throws EmptyInput for an empty score list and BadParameter when windows
/// disagree on the spectrum length.
ScoreTable score_table(std::span<const WindowScore> scores);

/// Header line then one comma-separated line per row, '\n' line endings.
/// Reals use the shortest representation that round-trips.
void write_csv(std::ostream& out, const ScoreTable& table);

/// One JSON object per line with keys in column order; the eigenvalues are
/// emitted as the array "spectrum" instead of lambda_i keys.
void write_jsonl(std::ostream& out, const ScoreTable& table);

}  // namespace linlaw
