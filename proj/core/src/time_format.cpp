#include "linlaw/time_format.hpp"

#include <charconv>
#include <chrono>

#include <fmt/format.h>

#include "linlaw/error.hpp"

namespace linlaw {

namespace {

template <typename T>
bool read_fixed(std::string_view text, std::size_t pos, std::size_t len, T& out) {
  if (pos + len > text.size()) return false;
  const char* first = text.data() + pos;
  const auto [ptr, ec] = std::from_chars(first, first + len, out);
  return ec == std::errc{} && ptr == first + len;
}

}  // namespace

std::string format_iso8601_utc(std::int64_t epoch_seconds) {
  using namespace std::chrono;
  const sys_seconds tp{seconds{epoch_seconds}};
  const auto day = floor<days>(tp);
  const year_month_day ymd{day};
  const hh_mm_ss hms{tp - day};
  return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}Z", static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                     hms.hours().count(), hms.minutes().count(), hms.seconds().count());
}

std::int64_t parse_iso8601_utc(std::string_view text) {
  using namespace std::chrono;
  const auto fail = [&] {
    return Error(ErrorCode::ParseError, "not an ISO-8601 UTC time: '" + std::string(text) + "'");
  };

  int y = 0;
  unsigned mo = 0, d = 0, h = 0, mi = 0, s = 0;
  if (!read_fixed(text, 0, 4, y) || text.size() < 10 || text[4] != '-' ||
      !read_fixed(text, 5, 2, mo) || text[7] != '-' || !read_fixed(text, 8, 2, d))
    throw fail();
  std::size_t pos = 10;
  if (pos < text.size() && (text[pos] == 'T' || text[pos] == ' ')) {
    if (!read_fixed(text, pos + 1, 2, h) || text.size() < pos + 6 || text[pos + 3] != ':' ||
        !read_fixed(text, pos + 4, 2, mi))
      throw fail();
    pos += 6;
    if (pos < text.size() && text[pos] == ':') {
      if (!read_fixed(text, pos + 1, 2, s)) throw fail();
      pos += 3;
    }
  }
  if (pos < text.size() && text[pos] == 'Z') ++pos;
  if (pos != text.size()) throw fail();

  const year_month_day ymd{year{y}, month{mo}, day{d}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) throw fail();
  const auto tp = sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
  return tp.time_since_epoch().count();
}

}  // namespace linlaw
