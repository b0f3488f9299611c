// Apache License, Version 2.0, refer to LICENSE.txt
#include "gamcast/dates.hpp"

#include <array>
#include <cstdio>

namespace gamcast {

namespace {

constexpr std::array<std::string_view, 7> kWeekdayNames = {"Mon", "Tue", "Wed", "Thu",
                                                           "Fri", "Sat", "Sun"};
constexpr std::array<std::string_view, 12> kMonthNames = {"Jan", "Feb", "Mar", "Apr",
                                                          "May", "Jun", "Jul", "Aug",
                                                          "Sep", "Oct", "Nov", "Dec"};

bool parse_uint(std::string_view text, unsigned& out) {
	if (text.empty()) return false;
	unsigned value = 0;
	for (char c : text) {
		if (c < '0' || c > '9') return false;
		value = value * 10 + static_cast<unsigned>(c - '0');
	}
	out = value;
	return true;
}

}  // namespace

Date make_date(int year, unsigned month, unsigned day) {
	using namespace std::chrono;
	return sys_days{year_month_day{std::chrono::year{year}, std::chrono::month{month},
	                               std::chrono::day{day}}};
}

std::optional<Date> parse_date(std::string_view text) {
	// Date part is the leading "YYYY-MM-DD"; anything after must start with
	// 'T' or ' ' (time-of-day is ignored).
	if (text.size() < 10) return std::nullopt;
	if (text.size() > 10 && text[10] != 'T' && text[10] != ' ') return std::nullopt;
	if (text[4] != '-' || text[7] != '-') return std::nullopt;
	unsigned y = 0, m = 0, d = 0;
	if (!parse_uint(text.substr(0, 4), y) || !parse_uint(text.substr(5, 2), m) ||
	    !parse_uint(text.substr(8, 2), d)) {
		return std::nullopt;
	}
	std::chrono::year_month_day ymd{std::chrono::year{static_cast<int>(y)},
	                                std::chrono::month{m}, std::chrono::day{d}};
	if (!ymd.ok()) return std::nullopt;
	return std::chrono::sys_days{ymd};
}

std::string to_iso_string(Date d) {
	std::chrono::year_month_day ymd{d};
	char buf[16];
	std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
	              static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
	return buf;
}

int weekday_iso(Date d) {
	return static_cast<int>(std::chrono::weekday{d}.iso_encoding());
}

unsigned day_of_month(Date d) {
	return static_cast<unsigned>(std::chrono::year_month_day{d}.day());
}

unsigned month_of_year(Date d) {
	return static_cast<unsigned>(std::chrono::year_month_day{d}.month());
}

std::string_view weekday_name(int iso_weekday) {
	return kWeekdayNames.at(static_cast<std::size_t>(iso_weekday - 1));
}

std::string_view month_name(unsigned month) {
	return kMonthNames.at(month - 1);
}

}  // namespace gamcast
