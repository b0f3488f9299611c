// Apache License, Version 2.0, refer to LICENSE.txt
#include "gamcast/series.hpp"

#include <stdexcept>

namespace gamcast {

OpenDayCalendar OpenDayCalendar::from_line_items(const std::vector<LineItem>& items) {
	OpenDayCalendar cal;
	for (const auto& it : items) cal.add(it.date());
	return cal;
}

int SalesSeries::observed_count() const {
	int n = 0;
	for (const auto& v : values) n += v.has_value() ? 1 : 0;
	return n;
}

std::vector<Date> SalesSeries::observed_dates() const {
	std::vector<Date> dates;
	dates.reserve(values.size());
	for (int i = 0; i < span_days(); ++i) {
		if (values[static_cast<std::size_t>(i)]) dates.push_back(date_at(i));
	}
	return dates;
}

std::vector<double> SalesSeries::observed_values() const {
	std::vector<double> out;
	out.reserve(values.size());
	for (const auto& v : values) {
		if (v) out.push_back(*v);
	}
	return out;
}

SalesSeries SalesSeries::observed_prefix(int n_observed) const {
	if (n_observed < 1 || n_observed > observed_count()) {
		throw std::invalid_argument("observed_prefix: count out of range");
	}
	SalesSeries out;
	out.item_id = item_id;
	out.first_date = first_date;
	int seen = 0;
	for (std::size_t i = 0; i < values.size(); ++i) {
		out.values.push_back(values[i]);
		if (values[i] && ++seen == n_observed) break;
	}
	return out;
}

std::map<Date, double> aggregate_daily(const std::vector<LineItem>& items,
                                       std::string_view item_id) {
	std::map<Date, double> daily;
	for (const auto& it : items) {
		if (it.item_id != item_id) continue;
		if (it.quantity < 1) throw std::invalid_argument("line item quantity must be >= 1");
		daily[it.date()] += static_cast<double>(it.quantity);
	}
	if (daily.empty()) {
		throw std::invalid_argument("no records for item '" + std::string(item_id) + "'");
	}
	return daily;
}

SalesSeries classify_days(const std::map<Date, double>& raw, const OpenDayCalendar& calendar,
                          std::string_view item_id, int delisting_gap_days) {
	if (raw.empty()) throw std::invalid_argument("classify_days: no sales to classify");
	const Date first = raw.begin()->first;
	const Date last = raw.rbegin()->first;
	if (calendar.empty() || calendar.first() > first || calendar.last() < last) {
		throw std::invalid_argument("classify_days: calendar does not cover the sales span");
	}

	SalesSeries series;
	series.item_id = std::string(item_id);
	series.first_date = first;
	const int span = days_between(first, last) + 1;
	series.values.resize(static_cast<std::size_t>(span));

	for (int i = 0; i < span; ++i) {
		const Date d = series.date_at(i);
		auto sale = raw.find(d);
		if (sale != raw.end()) {
			series.values[static_cast<std::size_t>(i)] = sale->second;
		} else if (calendar.is_open(d)) {
			series.values[static_cast<std::size_t>(i)] = 0.0;
		}
		// closed day: stays missing
	}

	// Delisting: a run of delisting_gap_days or more consecutive calendar days
	// without a sale of this item (closed days included) marks the whole run
	// missing, zeros and all.
	int prev_sale = 0;
	for (int i = 1; i < span; ++i) {
		if (raw.count(series.date_at(i)) == 0) continue;
		const int gap = i - prev_sale - 1;
		if (gap >= delisting_gap_days) {
			for (int j = prev_sale + 1; j < i; ++j) {
				series.values[static_cast<std::size_t>(j)].reset();
			}
		}
		prev_sale = i;
	}
	return series;
}

std::vector<std::string> list_items(const std::vector<LineItem>& items) {
	std::set<std::string> ids;
	for (const auto& it : items) ids.insert(it.item_id);
	return {ids.begin(), ids.end()};
}

}  // namespace gamcast
