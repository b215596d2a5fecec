#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linlaw {

enum class ErrorCode {
  // markov_core
  NotSquare,
  NotStochastic,
  NonUnique,
  BadInitialState,
  BadParameter,
  IncompleteMap,
  // linlaw_extractor
  SeriesTooShort,
  InsufficientLags,
  BadConfig,
  NotSymmetric,
  IndefiniteBeyondTolerance,
  DegenerateNullspace,
  OrderTooSmall,
  // anomaly_scanner
  TooShort,
  WindowTooSmall,
  EmptyScan,
  EmptyInput,
  // price_ingest
  UnreadableSource,
  NoDataRows,
  EmptyAfterFilter,
  // file formats
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for faults caused by numerically degenerate input rather than
/// malformed input (the CLI maps these to a separate exit status).
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace linlaw
