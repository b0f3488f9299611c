// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gamcast {

/// Smoothing width for |x| ~ sqrt(x^2 + eps^2) inside L1 prior terms.
inline constexpr double kSmoothAbsEps = 1e-8;

double smooth_abs(double x, double eps = kSmoothAbsEps);
double smooth_abs_grad(double x, double eps = kSmoothAbsEps);

double laplace_log_pdf(double x, double scale);
double normal_log_pdf(double x, double variance);
/// Half-Cauchy C+(0,1) log density, x > 0.
double half_cauchy_log_pdf(double x);
/// Half-normal N+(0,1) log density, x > 0.
double half_normal_log_pdf(double x);

/// Negative binomial log pmf in the (mu, phi) parameterization:
/// E(y) = mu, Var(y) = mu + mu^2/phi.
double neg_binomial_log_pmf(double y, double mu, double phi);
/// Same with the mean given on the log scale (mu = exp(eta)); stable for
/// large |eta|.
double neg_binomial_log_pmf_eta(double y, double eta, double phi);

/// Empirical quantile by the nearest-rank rule: the ceil(q*n)-th smallest.
double nearest_rank_quantile(const std::vector<double>& sorted, double q);

/// Stateless mixing of a base seed with a stream index (splitmix64); used to
/// derive independent per-replicate and per-task seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Deterministic random source. All transforms are implemented on top of the
/// raw mt19937_64 output so that sequences do not depend on the standard
/// library's distribution implementations.
class Rng {
public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	/// Uniform on the open interval (0, 1).
	double uniform();
	double normal();
	double exponential();
	double laplace(double scale);
	/// Gamma(shape, 1) by Marsaglia-Tsang squeeze.
	double gamma(double shape);
	long poisson(double mean);
	/// Gamma-Poisson mixture matching neg_binomial_log_pmf.
	long neg_binomial(double mu, double phi);

private:
	std::mt19937_64 engine_;
};

}  // namespace gamcast
