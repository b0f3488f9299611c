// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gamcast/model.hpp"
#include "gamcast/series.hpp"

namespace gamcast {

inline constexpr double kZeroThreshold = 1e-4;
inline constexpr int kMinObservations = 8;

struct FitDiagnostics {
	double objective = 0.0;
	int iterations = 0;
	bool converged = false;
	double grad_norm = 0.0;
};

/// MAP estimate with everything needed to rebuild designs for any date:
/// the date map, knot set and granularity snapshot travel with the fit.
/// Coefficient values are kept as estimated; the sparsity masks only flag
/// which ones are reported as zero.
struct MapEstimate {
	ModelSpec spec;
	std::string item_id;
	DateMap date_map;
	KnotSet knots;
	Date train_last{};

	std::vector<std::string> beta_labels;
	std::vector<std::string> gamma_labels;
	Eigen::VectorXd beta;
	Eigen::VectorXd gamma;
	std::vector<bool> beta_zero;
	std::vector<bool> gamma_zero;

	double sigma2 = 0.0;        // NORMAL
	double dispersion_a = 0.0;  // NEGBINOM; phi = 1/a^2
	Eigen::VectorXd log_lambda;  // horseshoe local scales
	double log_tau_hs = 0.0;

	bool lasso_warm_start = false;
	double zero_threshold = kZeroThreshold;
	FitDiagnostics diagnostics;

	int n_changes() const { return static_cast<int>(gamma.size()) - spec.spline_degree - 1; }
	/// Change-point coefficients gamma_{l+2..d}, unmasked values.
	Eigen::VectorXd change_coefficients() const {
		return gamma.segment(spec.spline_degree + 1, n_changes());
	}
	double dispersion_phi() const { return 1.0 / (dispersion_a * dispersion_a); }
};

/// Starting point for the optimizer: intercept at the (transformed) sample
/// mean, all other coefficients zero, nuisance from the sample variance or
/// a = 1. A horseshoe start chains from a completed LASSO fit.
Eigen::VectorXd initialize(const SalesSeries& series, const ModelSpec& spec);

/// MAP estimate by limited-memory quasi-Newton ascent of the log posterior.
/// Requires at least kMinObservations observed days.
MapEstimate fit_map(const SalesSeries& series, const ModelSpec& spec);

/// Flags coefficients in the L1 groups (trend changes and seasonals) with
/// magnitude below the threshold as reported zeros; values are preserved.
MapEstimate sparsify(MapEstimate est, double zero_threshold = kZeroThreshold);

}  // namespace gamcast
