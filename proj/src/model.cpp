// Apache License, Version 2.0, refer to LICENSE.txt
#include "gamcast/model.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/SpecialFunctions>

#include "gamcast/distributions.hpp"

namespace gamcast {

namespace {

constexpr double kLogTwo = 0.6931471805599453;
constexpr double kLogTwoPi = 1.8378770664093453;

double digamma(double x) { return Eigen::numext::digamma(x); }

// Laplace(0, scale) with the smoothed absolute value; returns the log density
// and accumulates the coefficient gradient.
double smoothed_laplace_term(double x, double inv_scale, double* grad_x) {
	if (grad_x) *grad_x += -inv_scale * smooth_abs_grad(x);
	return std::log(inv_scale) - kLogTwo - inv_scale * smooth_abs(x);
}

}  // namespace

ParamLayout ParamLayout::from(const DesignPair& design, const ModelSpec& spec) {
	ParamLayout layout;
	layout.n_seasonal = design.n_seasonal();
	layout.n_trend = design.n_trend();
	layout.degree = spec.spline_degree;
	layout.horseshoe = spec.prior.family == PriorFamily::HORSESHOE;
	if (layout.n_trend < layout.degree + 1) {
		throw std::invalid_argument("ParamLayout: trend design narrower than the polynomial");
	}
	return layout;
}

ParamView unpack(const Eigen::VectorXd& params, const ParamLayout& layout) {
	if (params.size() != layout.size()) {
		throw std::invalid_argument("unpack: parameter vector does not match layout");
	}
	ParamView view;
	view.beta = params.segment(layout.beta_offset(), layout.n_seasonal);
	view.gamma = params.segment(layout.gamma_offset(), layout.n_trend);
	view.log_nuisance = params[layout.nuisance_index()];
	if (layout.horseshoe) {
		view.log_lambda = params.segment(layout.log_lambda_offset(), layout.n_local_scales());
		view.log_tau = params[layout.log_tau_index()];
	}
	return view;
}

Eigen::VectorXd pack(const ParamView& view, const ParamLayout& layout) {
	Eigen::VectorXd params = Eigen::VectorXd::Zero(layout.size());
	if (view.beta.size() != layout.n_seasonal || view.gamma.size() != layout.n_trend) {
		throw std::invalid_argument("pack: block sizes do not match layout");
	}
	params.segment(layout.beta_offset(), layout.n_seasonal) = view.beta;
	params.segment(layout.gamma_offset(), layout.n_trend) = view.gamma;
	params[layout.nuisance_index()] = view.log_nuisance;
	if (layout.horseshoe) {
		if (view.log_lambda.size() != layout.n_local_scales()) {
			throw std::invalid_argument("pack: horseshoe scale block does not match layout");
		}
		params.segment(layout.log_lambda_offset(), layout.n_local_scales()) = view.log_lambda;
		params[layout.log_tau_index()] = view.log_tau;
	}
	return params;
}

double horseshoe_log_prior(const Eigen::VectorXd& coeffs, const Eigen::VectorXd& log_lambda,
                           double log_tau, std::optional<double> sigma2) {
	if (coeffs.size() != log_lambda.size()) {
		throw std::invalid_argument("horseshoe_log_prior: one local scale per coefficient");
	}
	const double log_s2 = sigma2 ? std::log(*sigma2) : 0.0;
	double lp = 0.0;
	for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
		const double log_v = 2.0 * log_lambda[j] + 2.0 * log_tau + log_s2;
		lp += -0.5 * (kLogTwoPi + log_v) - coeffs[j] * coeffs[j] / (2.0 * std::exp(log_v));
		const double lambda = std::exp(log_lambda[j]);
		lp += half_cauchy_log_pdf(lambda) + log_lambda[j];
	}
	lp += half_cauchy_log_pdf(std::exp(log_tau)) + log_tau;
	return lp;
}

double eval_log_posterior(const Eigen::VectorXd& params, const Eigen::VectorXd& y,
                          const DesignPair& design, const ModelSpec& spec,
                          Eigen::VectorXd* grad) {
	const ParamLayout layout = ParamLayout::from(design, spec);
	const auto n = y.size();
	if (params.size() != layout.size()) {
		throw std::invalid_argument("log_posterior: parameter vector does not match the design");
	}
	if (design.X.rows() != n || design.Z.rows() != n) {
		throw std::invalid_argument("log_posterior: y is not aligned with the design rows");
	}
	if (!params.allFinite() || !y.allFinite()) {
		throw std::invalid_argument("log_posterior: non-finite input");
	}

	const int s = layout.n_seasonal;
	const int d = layout.n_trend;
	const int degree = layout.degree;
	const int m = layout.n_changes();
	const auto beta = params.segment(layout.beta_offset(), s);
	const auto gamma = params.segment(layout.gamma_offset(), d);
	const double nu = params[layout.nuisance_index()];
	const PriorConfig& prior = spec.prior;

	if (grad) *grad = Eigen::VectorXd::Zero(layout.size());

	const Eigen::VectorXd eta = design.X * beta + design.Z * gamma;

	double lp = 0.0;
	// dlp/d(eta_i); mapped back through X and Z at the end.
	Eigen::VectorXd eta_grad;
	if (grad) eta_grad = Eigen::VectorXd::Zero(n);
	double nu_grad = 0.0;

	if (spec.likelihood == Likelihood::NORMAL) {
		const double sigma2 = std::exp(nu);
		const Eigen::VectorXd resid = y - eta;
		const double rss = resid.squaredNorm();
		lp += -0.5 * static_cast<double>(n) * (kLogTwoPi + nu) - rss / (2.0 * sigma2);
		// scale-invariant prior p(sigma^2) ~ 1/sigma^2 plus the log-space
		// Jacobian: -nu + nu = 0
		if (grad) {
			eta_grad = resid / sigma2;
			nu_grad += -0.5 * static_cast<double>(n) + rss / (2.0 * sigma2);
		}
	} else {
		const double a = std::exp(nu);
		const double phi = std::exp(-2.0 * nu);
		const double log_phi = -2.0 * nu;
		double dll_dphi = 0.0;
		for (Eigen::Index i = 0; i < n; ++i) {
			const double eta_i = eta[i];
			const double log_sum = eta_i >= log_phi
			                           ? eta_i + std::log1p(std::exp(log_phi - eta_i))
			                           : log_phi + std::log1p(std::exp(eta_i - log_phi));
			const double yi = y[i];
			lp += std::lgamma(yi + phi) - std::lgamma(phi) - std::lgamma(yi + 1.0) +
			      phi * (log_phi - log_sum) + yi * (eta_i - log_sum);
			if (grad) {
				eta_grad[i] = yi - (yi + phi) * std::exp(eta_i - log_sum);
				dll_dphi += digamma(yi + phi) - digamma(phi) + (log_phi - log_sum) + 1.0 -
				            (yi + phi) * std::exp(-log_sum);
			}
		}
		// half-normal prior on a plus the log-space Jacobian
		lp += half_normal_log_pdf(a) + nu;
		if (grad) nu_grad += dll_dphi * (-2.0 * phi) - a * a + 1.0;
	}

	// Seasonal coefficients: Laplace, conditioned on sigma^2 under NORMAL.
	const bool conditioned = spec.likelihood == Likelihood::NORMAL;
	const double sigma = conditioned ? std::exp(0.5 * nu) : 1.0;
	{
		const double inv_scale = prior.tau2 / sigma;
		for (int j = 0; j < s; ++j) {
			double g = 0.0;
			lp += smoothed_laplace_term(beta[j], inv_scale, grad ? &g : nullptr);
			if (grad) {
				(*grad)[layout.beta_offset() + j] += g;
				nu_grad += -0.5 + prior.tau2 * smooth_abs(beta[j]) / (2.0 * sigma);
			}
		}
	}

	if (prior.family == PriorFamily::LASSO) {
		// Global polynomial: independent normals with sd tau3.
		const double tau3_sq = prior.tau3 * prior.tau3;
		for (int j = 0; j < degree; ++j) {
			const double g_j = gamma[1 + j];
			lp += normal_log_pdf(g_j, tau3_sq);
			if (grad) (*grad)[layout.poly_offset() + j] += -g_j / tau3_sq;
		}
		// Trend changes: Laplace.
		const double inv_scale = prior.tau1 / sigma;
		for (int j = 0; j < m; ++j) {
			const double g_j = gamma[degree + 1 + j];
			double g = 0.0;
			lp += smoothed_laplace_term(g_j, inv_scale, grad ? &g : nullptr);
			if (grad) {
				(*grad)[layout.change_offset() + j] += g;
				nu_grad += -0.5 + prior.tau1 * smooth_abs(g_j) / (2.0 * sigma);
			}
		}
	} else {
		// Horseshoe over all non-intercept trend coefficients.
		const auto log_lambda = params.segment(layout.log_lambda_offset(), layout.n_local_scales());
		const double log_tau = params[layout.log_tau_index()];
		const double log_s2 = conditioned ? nu : 0.0;
		for (int j = 0; j < d - 1; ++j) {
			const double g_j = gamma[1 + j];
			const double log_v = 2.0 * log_lambda[j] + 2.0 * log_tau + log_s2;
			const double v = std::exp(log_v);
			lp += -0.5 * (kLogTwoPi + log_v) - g_j * g_j / (2.0 * v);
			const double lambda_sq = std::exp(2.0 * log_lambda[j]);
			lp += half_cauchy_log_pdf(std::exp(log_lambda[j])) + log_lambda[j];
			if (grad) {
				(*grad)[layout.gamma_offset() + 1 + j] += -g_j / v;
				(*grad)[layout.log_lambda_offset() + j] +=
				    g_j * g_j / v - 2.0 * lambda_sq / (1.0 + lambda_sq);
				(*grad)[layout.log_tau_index()] += g_j * g_j / v - 1.0;
				if (conditioned) nu_grad += -0.5 + g_j * g_j / (2.0 * v);
			}
		}
		const double tau_sq = std::exp(2.0 * log_tau);
		lp += half_cauchy_log_pdf(std::exp(log_tau)) + log_tau;
		if (grad) (*grad)[layout.log_tau_index()] += 1.0 - 2.0 * tau_sq / (1.0 + tau_sq);
	}

	if (grad) {
		grad->segment(layout.beta_offset(), s) += design.X.transpose() * eta_grad;
		grad->segment(layout.gamma_offset(), d) += design.Z.transpose() * eta_grad;
		(*grad)[layout.nuisance_index()] += nu_grad;
	}
	return lp;
}

double log_posterior(const Eigen::VectorXd& params, const Eigen::VectorXd& y,
                     const DesignPair& design, const ModelSpec& spec) {
	return eval_log_posterior(params, y, design, spec, nullptr);
}

Eigen::VectorXd grad_log_posterior(const Eigen::VectorXd& params, const Eigen::VectorXd& y,
                                   const DesignPair& design, const ModelSpec& spec) {
	Eigen::VectorXd grad;
	eval_log_posterior(params, y, design, spec, &grad);
	return grad;
}

}  // namespace gamcast
