#include "geomv/date.hpp"

#include <chrono>
#include <cstdio>

#include "geomv/errors.hpp"

namespace geomv {

namespace chr = std::chrono;

static chr::year_month_day ymd_of(const Date& d) {
    return chr::year_month_day{chr::sys_days{chr::days{d.days}}};
}

Date Date::from_ymd(int year, unsigned month, unsigned day) {
    chr::year_month_day ymd{chr::year{year}, chr::month{month}, chr::day{day}};
    if (!ymd.ok()) {
        throw ParseError("invalid calendar date " + std::to_string(year) + "-" +
                         std::to_string(month) + "-" + std::to_string(day));
    }
    return Date{chr::sys_days{ymd}.time_since_epoch().count()};
}

Date Date::parse_iso(const std::string& s) {
    int y = 0;
    unsigned m = 0, d = 0;
    if (std::sscanf(s.c_str(), "%d-%u-%u", &y, &m, &d) != 3) {
        throw ParseError("expected YYYY-MM-DD, got '" + s + "'");
    }
    return from_ymd(y, m, d);
}

int Date::year() const { return int(ymd_of(*this).year()); }
unsigned Date::month() const { return unsigned(ymd_of(*this).month()); }
unsigned Date::day() const { return unsigned(ymd_of(*this).day()); }

std::string Date::iso() const {
    char buf[16];
    auto ymd = ymd_of(*this);
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                  unsigned(ymd.day()));
    return buf;
}

bool is_leap_year(int year) { return chr::year{year}.is_leap(); }

}  // namespace geomv
