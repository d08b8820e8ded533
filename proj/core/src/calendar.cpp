#include "recsizer/calendar.hpp"

#include <array>
#include <cstdio>

#include "recsizer/errors.hpp"

namespace recsizer {

const char* to_string(Weekday d) {
    static constexpr std::array<const char*, 7> names = {"Mon", "Tue", "Wed", "Thu",
                                                         "Fri", "Sat", "Sun"};
    return names[static_cast<int>(d)];
}

const char* to_string(Season s) {
    static constexpr std::array<const char*, 4> names = {"winter", "spring", "summer", "fall"};
    return names[static_cast<int>(s)];
}

Season season_from_string(const std::string& name) {
    for (int i = 0; i < kSeasonCount; ++i) {
        if (name == to_string(static_cast<Season>(i))) return static_cast<Season>(i);
    }
    throw ParseError("unknown season name: " + name);
}

std::int64_t days_from_civil(const CivilDate& d) {
    // Howard Hinnant's algorithm, days since 1970-01-01.
    std::int64_t y = d.year;
    const int m = d.month;
    const int day = d.day;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

std::int64_t hours_from_civil(const CivilTime& t) {
    return days_from_civil(t.date) * 24 + t.hour;
}

CivilTime civil_from_hours(std::int64_t h) {
    std::int64_t days = h / 24;
    int hour = static_cast<int>(h % 24);
    if (hour < 0) {
        hour += 24;
        days -= 1;
    }
    return CivilTime{civil_from_days(days), hour};
}

Weekday weekday_of(const CivilDate& d) {
    // 1970-01-01 was a Thursday.
    std::int64_t z = days_from_civil(d);
    std::int64_t w = (z + 3) % 7; // shift so 0 = Monday
    if (w < 0) w += 7;
    return static_cast<Weekday>(w);
}

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                    31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) throw DomainError("month out of range");
    if (month == 2 && is_leap_year(year)) return 29;
    return lengths[month - 1];
}

Season season_of_month(int month) {
    if (month == 12 || month <= 2) return Season::Winter;
    if (month <= 5) return Season::Spring;
    if (month <= 8) return Season::Summer;
    return Season::Fall;
}

Season season_of(const CivilDate& d) { return season_of_month(d.month); }

CivilDate season_midpoint(Season s, int year) {
    switch (s) {
        case Season::Winter: return CivilDate{year, 2, 15};
        case Season::Spring: return CivilDate{year, 5, 15};
        case Season::Summer: return CivilDate{year, 8, 15};
        case Season::Fall: return CivilDate{year, 11, 15};
    }
    throw DomainError("invalid season");
}

namespace {

void check_date(const CivilDate& d, const std::string& text) {
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > days_in_month(d.year, d.month))
        throw ParseError("invalid calendar date: " + text);
}

} // namespace

CivilDate parse_date(const std::string& text) {
    CivilDate d;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%d%c", &d.year, &d.month, &d.day, &tail) != 3)
        throw ParseError("expected YYYY-MM-DD, got: " + text);
    check_date(d, text);
    return d;
}

CivilTime parse_timestamp(const std::string& text) {
    CivilTime t;
    int minute = 0, second = 0;
    char sep = 0;
    int n = std::sscanf(text.c_str(), "%d-%d-%d%c%d:%d:%d", &t.date.year, &t.date.month,
                        &t.date.day, &sep, &t.hour, &minute, &second);
    if (n < 5 || (sep != 'T' && sep != ' '))
        throw ParseError("expected ISO-8601 timestamp, got: " + text);
    check_date(t.date, text);
    if (t.hour < 0 || t.hour > 23 || minute != 0 || second != 0)
        throw ParseError("timestamps must fall on whole hours: " + text);
    return t;
}

std::string format_date(const CivilDate& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

std::string format_timestamp(const CivilTime& t) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:00:00", t.date.year, t.date.month,
                  t.date.day, t.hour);
    return buf;
}

CivilTime add_hours(const CivilTime& t, std::int64_t hours) {
    return civil_from_hours(hours_from_civil(t) + hours);
}

} // namespace recsizer
