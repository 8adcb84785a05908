#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace cardsim {

// Calendar date stored as days since 1970-01-01 (negative for earlier dates).
struct Date {
    int32_t days = 0;

    friend constexpr bool operator==(Date a, Date b) { return a.days == b.days; }
    friend constexpr bool operator!=(Date a, Date b) { return a.days != b.days; }
    friend constexpr bool operator<(Date a, Date b) { return a.days < b.days; }
    friend constexpr bool operator<=(Date a, Date b) { return a.days <= b.days; }
    friend constexpr bool operator>(Date a, Date b) { return a.days > b.days; }
    friend constexpr bool operator>=(Date a, Date b) { return a.days >= b.days; }

    constexpr Date plus_days(int32_t n) const { return Date{days + n}; }
};

struct CivilDate {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
};

// Days-from-civil and civil-from-days use the standard proleptic Gregorian
// conversion (Howard Hinnant's algorithm).
constexpr int32_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int32_t>(doe) - 719468;
}

constexpr Date make_date(int y, int m, int d) { return Date{days_from_civil(y, m, d)}; }

constexpr CivilDate civil_from_days(int32_t z) {
    z += 719468;
    const int era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int y = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return CivilDate{y + (m <= 2), static_cast<int>(m), static_cast<int>(d)};
}

constexpr CivilDate to_civil(Date d) { return civil_from_days(d.days); }

// 0 = Sunday .. 6 = Saturday. 1970-01-01 was a Thursday.
constexpr int day_of_week(Date d) {
    int32_t w = (d.days + 4) % 7;
    return w < 0 ? w + 7 : w;
}

constexpr bool is_weekend(Date d) {
    int w = day_of_week(d);
    return w == 0 || w == 6;
}

constexpr bool is_leap_year(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

constexpr int days_in_month(int y, int m) {
    constexpr int tab[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return (m == 2 && is_leap_year(y)) ? 29 : tab[m - 1];
}

constexpr int year_of(Date d) { return to_civil(d).year; }

// nth birthday of someone born on `birth`; Feb-29 birthdays fall on Feb-28
// in non-leap years.
constexpr Date birthday(Date birth, int n) {
    CivilDate c = to_civil(birth);
    int y = c.year + n;
    int day = c.day;
    if (day > days_in_month(y, c.month)) day = days_in_month(y, c.month);
    return make_date(y, c.month, day);
}

// Minutes since 1970-01-01T00:00 (UTC-agnostic simulation time).
struct DateTime {
    int64_t minutes = 0;

    constexpr Date date() const {
        int64_t d = minutes >= 0 ? minutes / 1440 : (minutes - 1439) / 1440;
        return Date{static_cast<int32_t>(d)};
    }
    constexpr int minute_of_day() const {
        int64_t m = minutes % 1440;
        return static_cast<int>(m < 0 ? m + 1440 : m);
    }
    friend constexpr bool operator<(DateTime a, DateTime b) { return a.minutes < b.minutes; }
    friend constexpr bool operator==(DateTime a, DateTime b) { return a.minutes == b.minutes; }
};

constexpr DateTime at_minute(Date d, int minute_of_day) {
    return DateTime{static_cast<int64_t>(d.days) * 1440 + minute_of_day};
}

inline std::string format_date(Date d) {
    CivilDate c = to_civil(d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", c.year, c.month, c.day);
    return buf;
}

// ISO-8601, minute precision: YYYY-MM-DDTHH:MM
inline void format_iso_minute(DateTime t, char out[17]) {
    CivilDate c = to_civil(t.date());
    int mod = t.minute_of_day();
    std::snprintf(out, 17, "%04d-%02d-%02dT%02d:%02d", c.year, c.month, c.day, mod / 60, mod % 60);
}

inline std::string format_iso_minute(DateTime t) {
    char buf[17];
    format_iso_minute(t, buf);
    return buf;
}

// Parses YYYY-MM-DD; returns false on malformed input.
bool parse_date(const std::string& s, Date& out);
// Parses YYYY-MM-DDTHH:MM.
bool parse_iso_minute(const std::string& s, DateTime& out);

}  // namespace cardsim
