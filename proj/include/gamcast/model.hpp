// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <Eigen/Dense>
#include <optional>

#include "gamcast/design.hpp"

namespace gamcast {

enum class Likelihood { NORMAL, NEGBINOM };
enum class PriorFamily { LASSO, HORSESHOE };

/// Shrinkage configuration. tau1 scales the Laplace prior on trend changes,
/// tau2 the Laplace prior on seasonal effects, tau3 is the prior sd of the
/// global polynomial coefficients. Under HORSESHOE the trend priors are
/// replaced by local/global half-Cauchy scales (optimized jointly, stored in
/// the parameter vector); tau2 still governs the seasonal Laplace prior.
struct PriorConfig {
	PriorFamily family = PriorFamily::LASSO;
	double tau1 = 5.0;
	double tau2 = 6.0;
	double tau3 = 0.001;
};

struct ModelSpec {
	Likelihood likelihood = Likelihood::NEGBINOM;
	PriorConfig prior;
	int spline_degree = 1;
	int knot_spacing = 30;
	SeasonGranularity granularity;
};

/// Position of each block inside the flat parameter vector:
/// [beta (s) | gamma (d) | log-nuisance | horseshoe log-lambda (d-1), log-tau].
/// The nuisance is log sigma^2 for NORMAL and log a for NEGBINOM, kept in log
/// space so the optimization is unconstrained.
struct ParamLayout {
	int n_seasonal = 0;  // s
	int n_trend = 0;     // d = degree + knots + 1
	int degree = 0;
	bool horseshoe = false;

	int n_changes() const { return n_trend - degree - 1; }
	int beta_offset() const { return 0; }
	int gamma_offset() const { return n_seasonal; }
	int poly_offset() const { return n_seasonal + 1; }
	int change_offset() const { return n_seasonal + 1 + degree; }
	int nuisance_index() const { return n_seasonal + n_trend; }
	int n_local_scales() const { return horseshoe ? n_trend - 1 : 0; }
	int log_lambda_offset() const { return n_seasonal + n_trend + 1; }
	int log_tau_index() const { return log_lambda_offset() + n_local_scales(); }
	int size() const { return n_seasonal + n_trend + 1 + (horseshoe ? n_trend : 0); }

	static ParamLayout from(const DesignPair& design, const ModelSpec& spec);
};

/// Named view of a flat parameter vector.
struct ParamView {
	Eigen::VectorXd beta;
	Eigen::VectorXd gamma;
	double log_nuisance = 0.0;
	Eigen::VectorXd log_lambda;  // empty unless horseshoe
	double log_tau = 0.0;
};

ParamView unpack(const Eigen::VectorXd& params, const ParamLayout& layout);
Eigen::VectorXd pack(const ParamView& view, const ParamLayout& layout);

/// Log posterior density (up to an additive constant) of the flat parameter
/// vector given observed values y aligned with the design rows. Includes the
/// likelihood, all coefficient priors, the nuisance prior (1/sigma^2 or
/// half-normal on a) and the log-space change-of-variables terms. L1 terms
/// use |x| ~ sqrt(x^2 + eps^2) so the surface stays smooth; see kSmoothAbsEps.
double log_posterior(const Eigen::VectorXd& params, const Eigen::VectorXd& y,
                     const DesignPair& design, const ModelSpec& spec);

/// Analytic gradient of log_posterior, aligned with the flat layout.
Eigen::VectorXd grad_log_posterior(const Eigen::VectorXd& params, const Eigen::VectorXd& y,
                                   const DesignPair& design, const ModelSpec& spec);

/// Value and gradient in one pass; grad may be null.
double eval_log_posterior(const Eigen::VectorXd& params, const Eigen::VectorXd& y,
                          const DesignPair& design, const ModelSpec& spec,
                          Eigen::VectorXd* grad);

/// Horseshoe prior over the non-intercept trend coefficients: normal densities
/// with scale lambda_j * tau (* sigma for the normal likelihood), half-Cauchy
/// densities on lambda and tau, and the log-scale Jacobians.
double horseshoe_log_prior(const Eigen::VectorXd& coeffs, const Eigen::VectorXd& log_lambda,
                           double log_tau, std::optional<double> sigma2 = std::nullopt);

}  // namespace gamcast
