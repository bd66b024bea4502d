#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace gufo {

enum class TemporalKind { Date, DateTimeStamp };

/// A parsed xsd:date or xsd:dateTimeStamp value. Date values order by
/// calendar day (any timezone suffix is ignored, matching lexicographic
/// ISO-8601 ordering of the plain forms); dateTimeStamp values are
/// normalized to UTC and order as instants. Ordering is only defined
/// between values of the same kind.
struct TemporalValue {
  TemporalKind kind = TemporalKind::Date;
  std::int64_t days = 0;        // days since 1970-01-01 (civil)
  std::int32_t secondOfDay = 0; // dateTimeStamp only, after UTC normalization
  std::int32_t nanos = 0;       // dateTimeStamp only

  friend bool operator<(const TemporalValue& a, const TemporalValue& b) {
    if (a.days != b.days) return a.days < b.days;
    if (a.secondOfDay != b.secondOfDay) return a.secondOfDay < b.secondOfDay;
    return a.nanos < b.nanos;
  }
  friend bool operator==(const TemporalValue& a, const TemporalValue& b) {
    return a.days == b.days && a.secondOfDay == b.secondOfDay && a.nanos == b.nanos;
  }
};

/// "YYYY-MM-DD" with optional timezone; validates the calendar date.
std::optional<TemporalValue> parse_xsd_date(std::string_view lexical);

/// "YYYY-MM-DDTHH:MM:SS(.frac)?(Z|+HH:MM|-HH:MM)"; the timezone is
/// mandatory per XSD and the value is normalized to UTC.
std::optional<TemporalValue> parse_xsd_date_time_stamp(std::string_view lexical);

std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d);

}  // namespace gufo
