// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gamcast/dates.hpp"

namespace gamcast {

/// Affine map from calendar dates to model time: the first observed date maps
/// to 0 and one day advances time by 1/span_days, so all observed dates land
/// in [0, 1). Dates past the training span map beyond 1.
struct DateMap {
	Date origin{};
	int span_days = 1;
};

DateMap make_date_map(Date first, Date last);

/// Model time of `d`. Throws for dates before the origin.
double delta(Date d, const DateMap& map);

/// Potential trend change points, one every `spacing_days` days, strictly
/// between the first and last observed date.
struct KnotSet {
	std::vector<Date> knots;
	int spacing_days = 30;

	int size() const { return static_cast<int>(knots.size()); }
};

KnotSet place_knots(Date first, Date last, int spacing_days);

/// Which dummy groups the seasonality carries. Weekday is always modelled;
/// the other groups switch on with the amount of data, see granularity_for.
struct SeasonGranularity {
	bool weekday = true;
	bool month_of_year = false;
	bool day_of_month = false;

	int column_count() const {
		return (weekday ? 7 : 0) + (month_of_year ? 12 : 0) + (day_of_month ? 31 : 0);
	}
};

/// Granularity rule: under 30 observed days only weekday effects, from 30 the
/// month of year is added, from 120 all groups including day of month.
SeasonGranularity granularity_for(int n_obs);

/// Seasonal dummies X (one-hot per active group, no reference level dropped)
/// and trend basis Z (truncated power basis: intercept, global polynomial,
/// one hinge per knot), with column labels.
struct DesignPair {
	Eigen::MatrixXd X;
	Eigen::MatrixXd Z;
	std::vector<std::string> x_labels;
	std::vector<std::string> z_labels;

	int n_rows() const { return static_cast<int>(Z.rows()); }
	int n_seasonal() const { return static_cast<int>(X.cols()); }
	int n_trend() const { return static_cast<int>(Z.cols()); }
};

/// Row i = [1, t, ..., t^l, (t-k_1)_+^l, ..., (t-k_m)_+^l] at t = delta(date_i).
Eigen::MatrixXd trend_design(const std::vector<Date>& dates, const KnotSet& knots, int degree,
                             const DateMap& map);

Eigen::MatrixXd season_design(const std::vector<Date>& dates, const SeasonGranularity& g);

std::vector<std::string> trend_labels(const KnotSet& knots, int degree);
std::vector<std::string> season_labels(const SeasonGranularity& g);

DesignPair make_designs(const std::vector<Date>& dates, const DateMap& map, const KnotSet& knots,
                        int degree, const SeasonGranularity& g);

}  // namespace gamcast
