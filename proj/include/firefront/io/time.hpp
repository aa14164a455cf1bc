#pragma once

// UTC timestamps as minutes since the Unix epoch.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "firefront/error.hpp"

namespace firefront::io {

/// Days since 1970-01-01 for a proleptic Gregorian date.
constexpr long long days_from_civil(long long y, unsigned m, unsigned d) {
  y -= m <= 2;
  const long long era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long long>(doe) - 719468;
}

namespace detail {

inline bool parse_fixed(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > s.size()) return false;
  for (std::size_t i = pos; i < pos + len; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  std::from_chars(s.data() + pos, s.data() + pos + len, out);
  return true;
}

inline bool valid_date(int y, int m, int d) {
  if (m < 1 || m > 12 || d < 1) return false;
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  return d <= kDays[m - 1] + (m == 2 && leap);
}

}  // namespace detail

/// "YYYY-MM-DD" -> minutes since epoch at 00:00 UTC.
inline double parse_date_minutes(std::string_view s) {
  int y = 0, m = 0, d = 0;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' || !detail::parse_fixed(s, 0, 4, y) ||
      !detail::parse_fixed(s, 5, 2, m) || !detail::parse_fixed(s, 8, 2, d) || !detail::valid_date(y, m, d))
    throw ValidationError("invalid date '" + std::string(s) + "' (expected YYYY-MM-DD)");
  return static_cast<double>(days_from_civil(y, static_cast<unsigned>(m), static_cast<unsigned>(d))) * 1440.0;
}

/// FIRMS acq_time: HHMM, possibly without leading zeros ("5" = 00:05).
inline double parse_hhmm_minutes(std::string_view s) {
  if (s.empty() || s.size() > 4) throw ValidationError("invalid HHMM time '" + std::string(s) + "'");
  int v = 0;
  if (!detail::parse_fixed(s, 0, s.size(), v)) throw ValidationError("invalid HHMM time '" + std::string(s) + "'");
  const int hh = v / 100, mm = v % 100;
  if (hh > 23 || mm > 59) throw ValidationError("invalid HHMM time '" + std::string(s) + "'");
  return hh * 60.0 + mm;
}

/// ISO 8601 subset: YYYY-MM-DD, YYYY-MM-DDTHH:MM, YYYY-MM-DDTHH:MM:SS, with an
/// optional trailing 'Z'. Always UTC.
inline double parse_iso8601_minutes(std::string_view s) {
  if (!s.empty() && (s.back() == 'Z' || s.back() == 'z')) s.remove_suffix(1);
  const double day = parse_date_minutes(s.substr(0, std::min<std::size_t>(10, s.size())));
  if (s.size() == 10) return day;
  int hh = 0, mm = 0, ss = 0;
  const bool ok = (s[10] == 'T' || s[10] == ' ') && detail::parse_fixed(s, 11, 2, hh) && s.size() >= 16 &&
                  s[13] == ':' && detail::parse_fixed(s, 14, 2, mm) &&
                  (s.size() == 16 || (s.size() == 19 && s[16] == ':' && detail::parse_fixed(s, 17, 2, ss)));
  if (!ok || hh > 23 || mm > 59 || ss > 60) throw ValidationError("invalid timestamp '" + std::string(s) + "'");
  return day + hh * 60.0 + mm + ss / 60.0;
}

}  // namespace firefront::io
