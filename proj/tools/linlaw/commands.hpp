#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "linlaw/anomaly.hpp"
#include "linlaw/error.hpp"

namespace linlaw::cli {

enum class OutputFormat { Csv, Json };

enum ExitStatus : int {
  kSuccess = 0,
  kInternalError = 1,
  kInputError = 2,
  kNumericalFault = 3,
  kScanError = 4,
};

// Defaults: 30 000-sample windows and a 20 x 5 embedding, as used for the
// Bitcoin scan and the hidden-Markov demo.
struct RunConfig {
  std::string input;   ///< series file, OHLCV CSV, or empty/"-" for stdin
  std::string output;  ///< empty or "-" for stdout
  std::string matrix;  ///< transfer-matrix file for simulate
  bool normalize = false;
  std::size_t width = 30'000;
  std::size_t stride = 0;  ///< 0 = width
  std::size_t lags = 20;
  std::size_t order = 5;
  std::uint64_t seed = 42;
  std::size_t length = 1'000'000;
  State x0 = 0;
  unsigned threads = 0;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> from;
  std::optional<std::string> to;

  EmbeddingConfig embedding() const { return {lags, order}; }
};

// Each command writes data to `out` and human-readable diagnostics to
// `diag`. Library errors propagate as linlaw::Error.
void cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
void cmd_analyze(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& diag);
void cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
void cmd_demo(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// Maps an error to the process exit status. Ingest failures and bad input
/// give kInputError, numerical degeneracy kNumericalFault, window/scan
/// configuration problems kScanError.
int exit_status_for(ErrorCode code) noexcept;

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace linlaw::cli
