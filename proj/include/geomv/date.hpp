#pragma once

#include <cstdint>
#include <string>

namespace geomv {

// Calendar date stored as days since 1970-01-01, proleptic Gregorian.
// Cheap to copy and to do day arithmetic on; y/m/d views go through
// std::chrono on demand.
struct Date {
    std::int64_t days = 0;

    static Date from_ymd(int year, unsigned month, unsigned day);
    static Date parse_iso(const std::string& s);  // "YYYY-MM-DD"

    int year() const;
    unsigned month() const;
    unsigned day() const;
    std::string iso() const;

    Date operator+(std::int64_t n) const { return Date{days + n}; }
    Date operator-(std::int64_t n) const { return Date{days - n}; }
    std::int64_t operator-(Date other) const { return days - other.days; }
    Date& operator++() { ++days; return *this; }
    auto operator<=>(const Date&) const = default;
};

bool is_leap_year(int year);

}  // namespace geomv
