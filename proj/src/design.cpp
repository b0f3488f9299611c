// Apache License, Version 2.0, refer to LICENSE.txt
#include "gamcast/design.hpp"

#include <cmath>
#include <stdexcept>

namespace gamcast {

DateMap make_date_map(Date first, Date last) {
	if (last < first) throw std::invalid_argument("make_date_map: last before first");
	return DateMap{first, days_between(first, last) + 1};
}

double delta(Date d, const DateMap& map) {
	const int offset = days_between(map.origin, d);
	if (offset < 0) throw std::invalid_argument("delta: date before the map origin");
	return static_cast<double>(offset) / static_cast<double>(map.span_days);
}

KnotSet place_knots(Date first, Date last, int spacing_days) {
	if (spacing_days < 1) throw std::invalid_argument("place_knots: spacing must be >= 1");
	KnotSet set;
	set.spacing_days = spacing_days;
	for (Date k = first + std::chrono::days{spacing_days}; k < last;
	     k += std::chrono::days{spacing_days}) {
		set.knots.push_back(k);
	}
	return set;
}

SeasonGranularity granularity_for(int n_obs) {
	if (n_obs < 1) throw std::invalid_argument("granularity_for: need at least one observation");
	SeasonGranularity g;
	g.weekday = true;
	g.month_of_year = n_obs >= 30;
	g.day_of_month = n_obs >= 120;
	return g;
}

namespace {

// (t - k)_+^l with the degree-0 convention (t - k)_+^0 = 1 for t >= k.
double truncated_power(double t, double knot, int degree) {
	if (t < knot) return 0.0;
	if (degree == 0) return 1.0;
	double base = t - knot;
	double result = base;
	for (int p = 1; p < degree; ++p) result *= base;
	return result;
}

}  // namespace

Eigen::MatrixXd trend_design(const std::vector<Date>& dates, const KnotSet& knots, int degree,
                             const DateMap& map) {
	if (dates.empty()) throw std::invalid_argument("trend_design: no dates");
	if (degree < 0) throw std::invalid_argument("trend_design: degree must be >= 0");
	const int n = static_cast<int>(dates.size());
	const int m = knots.size();
	const int d = degree + m + 1;

	std::vector<double> knot_delta(static_cast<std::size_t>(m));
	for (int j = 0; j < m; ++j) {
		knot_delta[static_cast<std::size_t>(j)] = delta(knots.knots[static_cast<std::size_t>(j)], map);
	}

	Eigen::MatrixXd Z(n, d);
	for (int i = 0; i < n; ++i) {
		const double t = delta(dates[static_cast<std::size_t>(i)], map);
		Z(i, 0) = 1.0;
		double power = 1.0;
		for (int p = 1; p <= degree; ++p) {
			power *= t;
			Z(i, p) = power;
		}
		for (int j = 0; j < m; ++j) {
			Z(i, degree + 1 + j) = truncated_power(t, knot_delta[static_cast<std::size_t>(j)], degree);
		}
	}
	return Z;
}

Eigen::MatrixXd season_design(const std::vector<Date>& dates, const SeasonGranularity& g) {
	if (dates.empty()) throw std::invalid_argument("season_design: no dates");
	const int n = static_cast<int>(dates.size());
	Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n, g.column_count());
	for (int i = 0; i < n; ++i) {
		const Date d = dates[static_cast<std::size_t>(i)];
		int offset = 0;
		if (g.weekday) {
			X(i, offset + weekday_iso(d) - 1) = 1.0;
			offset += 7;
		}
		if (g.month_of_year) {
			X(i, offset + static_cast<int>(month_of_year(d)) - 1) = 1.0;
			offset += 12;
		}
		if (g.day_of_month) {
			X(i, offset + static_cast<int>(day_of_month(d)) - 1) = 1.0;
		}
	}
	return X;
}

std::vector<std::string> trend_labels(const KnotSet& knots, int degree) {
	std::vector<std::string> labels;
	labels.reserve(static_cast<std::size_t>(degree + knots.size() + 1));
	labels.emplace_back("intercept");
	for (int p = 1; p <= degree; ++p) {
		labels.push_back("trend:t^" + std::to_string(p));
	}
	for (const Date& k : knots.knots) {
		labels.push_back("change:" + to_iso_string(k));
	}
	return labels;
}

std::vector<std::string> season_labels(const SeasonGranularity& g) {
	std::vector<std::string> labels;
	labels.reserve(static_cast<std::size_t>(g.column_count()));
	if (g.weekday) {
		for (int w = 1; w <= 7; ++w) labels.push_back("weekday:" + std::string(weekday_name(w)));
	}
	if (g.month_of_year) {
		for (unsigned m = 1; m <= 12; ++m) labels.push_back("month:" + std::string(month_name(m)));
	}
	if (g.day_of_month) {
		for (int d = 1; d <= 31; ++d) labels.push_back("dom:" + std::to_string(d));
	}
	return labels;
}

DesignPair make_designs(const std::vector<Date>& dates, const DateMap& map, const KnotSet& knots,
                        int degree, const SeasonGranularity& g) {
	DesignPair pair;
	pair.X = season_design(dates, g);
	pair.Z = trend_design(dates, knots, degree, map);
	pair.x_labels = season_labels(g);
	pair.z_labels = trend_labels(knots, degree);
	return pair;
}

}  // namespace gamcast
