// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace gamcast {

/// Calendar day, resolution of all series in this library.
using Date = std::chrono::sys_days;

Date make_date(int year, unsigned month, unsigned day);

/// Parses "YYYY-MM-DD" or a full ISO-8601 timestamp ("YYYY-MM-DDTHH:MM:SS[...]",
/// 'T' may be a space). Only the date part is retained.
std::optional<Date> parse_date(std::string_view text);

std::string to_iso_string(Date d);

/// Days from `from` to `to`; negative if `to` precedes `from`.
inline int days_between(Date from, Date to) {
	return static_cast<int>((to - from).count());
}

/// ISO weekday, 1 = Monday .. 7 = Sunday.
int weekday_iso(Date d);
unsigned day_of_month(Date d);
unsigned month_of_year(Date d);  // 1..12

std::string_view weekday_name(int iso_weekday);    // "Mon".."Sun"
std::string_view month_name(unsigned month);       // "Jan".."Dec"

}  // namespace gamcast
