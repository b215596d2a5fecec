#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace linlaw {

/// "YYYY-MM-DDTHH:MM:SSZ" for epoch seconds.
std::string format_iso8601_utc(std::int64_t epoch_seconds);

/// Accepts "YYYY-MM-DD", optionally followed by 'T' or ' ' and "HH:MM" or
/// "HH:MM:SS", optionally ending in 'Z'. Always read as UTC. Throws ParseError.
std::int64_t parse_iso8601_utc(std::string_view text);

}  // namespace linlaw
