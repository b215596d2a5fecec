#include "linlaw/error.hpp"

namespace linlaw {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotStochastic: return "NotStochastic";
    case ErrorCode::NonUnique: return "NonUnique";
    case ErrorCode::BadInitialState: return "BadInitialState";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::IncompleteMap: return "IncompleteMap";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::InsufficientLags: return "InsufficientLags";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::IndefiniteBeyondTolerance: return "IndefiniteBeyondTolerance";
    case ErrorCode::DegenerateNullspace: return "DegenerateNullspace";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::EmptyScan: return "EmptyScan";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnreadableSource: return "UnreadableSource";
    case ErrorCode::NoDataRows: return "NoDataRows";
    case ErrorCode::EmptyAfterFilter: return "EmptyAfterFilter";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonUnique:
    case ErrorCode::IndefiniteBeyondTolerance:
    case ErrorCode::DegenerateNullspace:
      return true;
    default:
      return false;
  }
}

}  // namespace linlaw
