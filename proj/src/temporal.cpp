#include "gufo/temporal.hpp"

#include <cctype>

namespace gufo {

namespace {

bool readDigits(std::string_view s, std::size_t& pos, unsigned count, std::int64_t& out) {
  std::int64_t v = 0;
  for (unsigned i = 0; i < count; ++i) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    v = v * 10 + (s[pos++] - '0');
  }
  out = v;
  return true;
}

bool daysInMonthOk(std::int64_t y, std::int64_t m, std::int64_t d) {
  static const int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m < 1 || m > 12 || d < 1) return false;
  int max = lengths[m - 1];
  bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  if (m == 2 && leap) max = 29;
  return d <= max;
}

// (year, month, day, consumed) for the leading YYYY-MM-DD part.
bool readDatePart(std::string_view s, std::size_t& pos, std::int64_t& y,
                  std::int64_t& m, std::int64_t& d) {
  bool negative = false;
  if (pos < s.size() && s[pos] == '-') {
    negative = true;
    ++pos;
  }
  // Year: at least four digits.
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos - start < 4) return false;
  y = 0;
  for (std::size_t i = start; i < pos; ++i) y = y * 10 + (s[i] - '0');
  if (negative) y = -y;
  if (pos >= s.size() || s[pos] != '-') return false;
  ++pos;
  if (!readDigits(s, pos, 2, m)) return false;
  if (pos >= s.size() || s[pos] != '-') return false;
  ++pos;
  if (!readDigits(s, pos, 2, d)) return false;
  return daysInMonthOk(y, m, d);
}

// Timezone suffix: Z | ±HH:MM. Returns offset minutes; nullopt = absent.
bool readTimezone(std::string_view s, std::size_t& pos, bool& present,
                  std::int64_t& offsetMinutes) {
  present = false;
  offsetMinutes = 0;
  if (pos >= s.size()) return true;
  if (s[pos] == 'Z') {
    ++pos;
    present = true;
    return pos == s.size();
  }
  if (s[pos] == '+' || s[pos] == '-') {
    bool neg = s[pos] == '-';
    ++pos;
    std::int64_t hh = 0, mm = 0;
    if (!readDigits(s, pos, 2, hh)) return false;
    if (pos >= s.size() || s[pos] != ':') return false;
    ++pos;
    if (!readDigits(s, pos, 2, mm)) return false;
    if (hh > 14 || mm > 59) return false;
    offsetMinutes = hh * 60 + mm;
    if (neg) offsetMinutes = -offsetMinutes;
    present = true;
    return pos == s.size();
  }
  return false;
}

}  // namespace

std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::optional<TemporalValue> parse_xsd_date(std::string_view lexical) {
  std::size_t pos = 0;
  std::int64_t y, m, d;
  if (!readDatePart(lexical, pos, y, m, d)) return std::nullopt;
  bool tzPresent = false;
  std::int64_t tz = 0;
  if (!readTimezone(lexical, pos, tzPresent, tz)) return std::nullopt;
  // Dates order by calendar day; a timezone suffix is accepted but does
  // not shift the day (plain-form lexicographic ordering).
  TemporalValue v;
  v.kind = TemporalKind::Date;
  v.days = days_from_civil(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
  return v;
}

std::optional<TemporalValue> parse_xsd_date_time_stamp(std::string_view lexical) {
  std::size_t pos = 0;
  std::int64_t y, mo, d;
  if (!readDatePart(lexical, pos, y, mo, d)) return std::nullopt;
  if (pos >= lexical.size() || lexical[pos] != 'T') return std::nullopt;
  ++pos;
  std::int64_t hh, mi, ss;
  if (!readDigits(lexical, pos, 2, hh)) return std::nullopt;
  if (pos >= lexical.size() || lexical[pos] != ':') return std::nullopt;
  ++pos;
  if (!readDigits(lexical, pos, 2, mi)) return std::nullopt;
  if (pos >= lexical.size() || lexical[pos] != ':') return std::nullopt;
  ++pos;
  if (!readDigits(lexical, pos, 2, ss)) return std::nullopt;
  if (hh > 24 || mi > 59 || ss > 59 || (hh == 24 && (mi != 0 || ss != 0))) {
    return std::nullopt;
  }
  std::int32_t nanos = 0;
  if (pos < lexical.size() && lexical[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    std::int64_t frac = 0;
    unsigned digits = 0;
    while (pos < lexical.size() && std::isdigit(static_cast<unsigned char>(lexical[pos]))) {
      if (digits < 9) {
        frac = frac * 10 + (lexical[pos] - '0');
        ++digits;
      }
      ++pos;
    }
    if (pos == start) return std::nullopt;
    while (digits < 9) {
      frac *= 10;
      ++digits;
    }
    nanos = static_cast<std::int32_t>(frac);
  }
  bool tzPresent = false;
  std::int64_t tz = 0;
  if (!readTimezone(lexical, pos, tzPresent, tz)) return std::nullopt;
  if (!tzPresent) return std::nullopt;  // dateTimeStamp requires a timezone

  // Normalize to UTC.
  std::int64_t days = days_from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(d));
  std::int64_t seconds = hh * 3600 + mi * 60 + ss - tz * 60;
  days += seconds / 86400;
  seconds %= 86400;
  if (seconds < 0) {
    seconds += 86400;
    --days;
  }
  TemporalValue v;
  v.kind = TemporalKind::DateTimeStamp;
  v.days = days;
  v.secondOfDay = static_cast<std::int32_t>(seconds);
  v.nanos = nanos;
  return v;
}

}  // namespace gufo
