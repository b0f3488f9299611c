// Apache License, Version 2.0, refer to LICENSE.txt
#include "gamcast/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gamcast {

namespace {
constexpr double kLogTwo = 0.6931471805599453;
constexpr double kLogPi = 1.1447298858494002;
constexpr double kLogTwoPi = 1.8378770664093453;
// Knuth's product method needs exp(-mean) well above the denormal range.
constexpr double kPoissonChunk = 200.0;
}  // namespace

double smooth_abs(double x, double eps) { return std::sqrt(x * x + eps * eps); }

double smooth_abs_grad(double x, double eps) { return x / smooth_abs(x, eps); }

double laplace_log_pdf(double x, double scale) {
	return -kLogTwo - std::log(scale) - std::abs(x) / scale;
}

double normal_log_pdf(double x, double variance) {
	return -0.5 * (kLogTwoPi + std::log(variance)) - x * x / (2.0 * variance);
}

double half_cauchy_log_pdf(double x) { return kLogTwo - kLogPi - std::log1p(x * x); }

double half_normal_log_pdf(double x) { return 0.5 * (kLogTwo - kLogPi) - 0.5 * x * x; }

double neg_binomial_log_pmf(double y, double mu, double phi) {
	if (mu <= 0.0 || phi <= 0.0) {
		throw std::invalid_argument("neg_binomial_log_pmf: mu and phi must be positive");
	}
	return neg_binomial_log_pmf_eta(y, std::log(mu), phi);
}

double neg_binomial_log_pmf_eta(double y, double eta, double phi) {
	const double log_phi = std::log(phi);
	// log(phi + mu), evaluated without forming exp(eta) when eta is large.
	const double log_sum = eta >= log_phi ? eta + std::log1p(std::exp(log_phi - eta))
	                                      : log_phi + std::log1p(std::exp(eta - log_phi));
	return std::lgamma(y + phi) - std::lgamma(phi) - std::lgamma(y + 1.0) +
	       phi * (log_phi - log_sum) + y * (eta - log_sum);
}

double nearest_rank_quantile(const std::vector<double>& sorted, double q) {
	if (sorted.empty()) throw std::invalid_argument("nearest_rank_quantile: empty sample");
	if (q <= 0.0 || q >= 1.0) throw std::invalid_argument("nearest_rank_quantile: q outside (0,1)");
	const auto n = static_cast<double>(sorted.size());
	auto rank = static_cast<std::size_t>(std::ceil(q * n));
	if (rank < 1) rank = 1;
	if (rank > sorted.size()) rank = sorted.size();
	return sorted[rank - 1];
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
	// splitmix64 finalizer over the combined state
	std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

double Rng::uniform() {
	// 53-bit mantissa, shifted into the open interval
	return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
	const double u1 = uniform();
	const double u2 = uniform();
	return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::exponential() { return -std::log(uniform()); }

double Rng::laplace(double scale) {
	const double v = uniform() - 0.5;
	const double sign = v < 0.0 ? -1.0 : 1.0;
	return -scale * sign * std::log1p(-2.0 * std::abs(v));
}

double Rng::gamma(double shape) {
	if (shape <= 0.0) throw std::invalid_argument("gamma: shape must be positive");
	if (shape < 1.0) {
		return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
	}
	const double d = shape - 1.0 / 3.0;
	const double c = 1.0 / std::sqrt(9.0 * d);
	for (;;) {
		double z = normal();
		double v = 1.0 + c * z;
		if (v <= 0.0) continue;
		v = v * v * v;
		const double u = uniform();
		if (u < 1.0 - 0.0331 * z * z * z * z) return d * v;
		if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return d * v;
	}
}

long Rng::poisson(double mean) {
	if (mean < 0.0) throw std::invalid_argument("poisson: mean must be >= 0");
	long total = 0;
	while (mean > kPoissonChunk) {
		total += poisson(kPoissonChunk);
		mean -= kPoissonChunk;
	}
	const double limit = std::exp(-mean);
	long k = 0;
	double p = 1.0;
	do {
		++k;
		p *= uniform();
	} while (p > limit);
	return total + k - 1;
}

long Rng::neg_binomial(double mu, double phi) {
	if (mu <= 0.0 || phi <= 0.0) {
		throw std::invalid_argument("neg_binomial: mu and phi must be positive");
	}
	const double rate = gamma(phi) * (mu / phi);
	return poisson(rate);
}

}  // namespace gamcast
