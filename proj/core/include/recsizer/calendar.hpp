#pragma once

#include <cstdint>
#include <string>

namespace recsizer {

enum class Weekday { Mon = 0, Tue, Wed, Thu, Fri, Sat, Sun };

enum class Season { Winter = 0, Spring, Summer, Fall };

constexpr int kSeasonCount = 4;

const char* to_string(Weekday d);
const char* to_string(Season s);
Season season_from_string(const std::string& name);

/// Proleptic Gregorian calendar date.
struct CivilDate {
    int year = 1970;
    int month = 1; // 1..12
    int day = 1;   // 1..31

    auto operator<=>(const CivilDate&) const = default;
};

/// A calendar timestamp with hour resolution (minutes/seconds are parsed
/// but must be zero for hourly series).
struct CivilTime {
    CivilDate date;
    int hour = 0; // 0..23

    auto operator<=>(const CivilTime&) const = default;
};

/// Days since 1970-01-01 (negative before).
std::int64_t days_from_civil(const CivilDate& d);
CivilDate civil_from_days(std::int64_t z);

/// Hours since 1970-01-01T00:00.
std::int64_t hours_from_civil(const CivilTime& t);
CivilTime civil_from_hours(std::int64_t h);

Weekday weekday_of(const CivilDate& d);
bool is_leap_year(int year);
int days_in_month(int year, int month);

/// Meteorological season of a month: Dec-Feb winter, Mar-May spring,
/// Jun-Aug summer, Sep-Nov fall.
Season season_of_month(int month);
Season season_of(const CivilDate& d);

/// Mid-season anchor dates used when a single day stands in for a season.
CivilDate season_midpoint(Season s, int year);

/// "YYYY-MM-DD"
CivilDate parse_date(const std::string& text);
/// "YYYY-MM-DDTHH:MM" or "YYYY-MM-DDTHH:MM:SS" (space separator also accepted).
CivilTime parse_timestamp(const std::string& text);

std::string format_date(const CivilDate& d);
std::string format_timestamp(const CivilTime& t);

CivilTime add_hours(const CivilTime& t, std::int64_t hours);

} // namespace recsizer
