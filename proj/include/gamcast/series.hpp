// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gamcast/dates.hpp"

namespace gamcast {

/// One POS record: a sold unit (or several) of one menu item.
struct LineItem {
	std::string item_id;
	std::chrono::sys_seconds timestamp;
	long quantity = 1;

	Date date() const { return std::chrono::floor<std::chrono::days>(timestamp); }
};

/// Days on which the venue was open: any recorded sale of any item.
class OpenDayCalendar {
public:
	static OpenDayCalendar from_line_items(const std::vector<LineItem>& items);

	void add(Date d) { open_.insert(d); }
	bool is_open(Date d) const { return open_.count(d) > 0; }
	bool empty() const { return open_.empty(); }
	Date first() const { return *open_.begin(); }
	Date last() const { return *open_.rbegin(); }
	std::size_t size() const { return open_.size(); }

private:
	std::set<Date> open_;
};

/// An item is assumed delisted after this many consecutive days without a sale.
inline constexpr int kDelistingGapDays = 60;

/// Per-item daily sales with explicit missing-value semantics. Holds one entry
/// per calendar day in [first_date, last_date]; disengaged entries are missing
/// (venue closed, item off the menu). First and last entries are observed.
struct SalesSeries {
	std::string item_id;
	Date first_date{};
	std::vector<std::optional<double>> values;

	int span_days() const { return static_cast<int>(values.size()); }
	Date last_date() const { return first_date + std::chrono::days{span_days() - 1}; }
	Date date_at(int index) const { return first_date + std::chrono::days{index}; }

	int observed_count() const;
	std::vector<Date> observed_dates() const;
	std::vector<double> observed_values() const;
	/// Truncation ending at the n-th observed day (1-based count).
	SalesSeries observed_prefix(int n_observed) const;
};

/// Sums quantities of `item_id` per calendar day. Days without records are
/// absent from the result. Throws if the item has no records at all.
std::map<Date, double> aggregate_daily(const std::vector<LineItem>& items,
                                       std::string_view item_id);

/// Expands a per-day sale map into a SalesSeries over the full span between the
/// first and last sale. Open days without a sale become zero unless they fall
/// in a no-sale gap of at least `delisting_gap_days` calendar days, which is
/// read as the item having been taken off the menu and marked missing; closed
/// days are always missing.
SalesSeries classify_days(const std::map<Date, double>& raw, const OpenDayCalendar& calendar,
                          std::string_view item_id = "",
                          int delisting_gap_days = kDelistingGapDays);

/// Distinct item ids present in the input, in sorted order.
std::vector<std::string> list_items(const std::vector<LineItem>& items);

}  // namespace gamcast
