#pragma once

#include <cstdint>
#include <string>

namespace aml {

// Seconds since the Unix epoch, UTC.
using EpochSeconds = int64_t;

constexpr int64_t kSecondsPerDay = 86400;

// Days since 1970-01-01 for a proleptic Gregorian civil date.
int64_t days_from_civil(int year, int month, int day);

// Inverse of days_from_civil.
void civil_from_days(int64_t days, int& year, int& month, int& day);

// Parses an RFC 3339 timestamp ("2024-01-31T17:05:00Z",
// "2024-01-31 17:05:00.25+01:30") into UTC epoch seconds.
// Fractional seconds are accepted and truncated. Throws DataError on
// malformed input.
EpochSeconds parse_rfc3339(const std::string& text);

// Formats UTC epoch seconds as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(EpochSeconds t);

// Calendar day containing t (floor division; valid for t < 0 too).
inline int64_t epoch_day(EpochSeconds t) {
    int64_t d = t / kSecondsPerDay;
    if (t % kSecondsPerDay < 0) --d;
    return d;
}

}  // namespace aml
