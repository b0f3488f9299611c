// Apache License, Version 2.0, refer to LICENSE.txt
#include "gamcast/lbfgs.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gamcast {

namespace {

struct Correction {
	Eigen::VectorXd s;
	Eigen::VectorXd y;
	double rho;
};

}  // namespace

LbfgsResult lbfgs_minimize(const ObjectiveFn& objective, Eigen::VectorXd x0,
                           const LbfgsOptions& options) {
	const auto dim = x0.size();
	Eigen::VectorXd grad(dim);
	double fx = objective(x0, grad);
	if (!std::isfinite(fx)) {
		throw std::runtime_error("lbfgs: objective is not finite at the initial point");
	}

	LbfgsResult result;
	result.x = std::move(x0);
	result.fx = fx;
	result.grad_norm = grad.lpNorm<Eigen::Infinity>();
	if (result.grad_norm < options.grad_tolerance) {
		result.converged = true;
		return result;
	}

	std::deque<Correction> history;
	Eigen::VectorXd direction(dim), x_new(dim), grad_new(dim), alpha(options.history);

	for (int iter = 1; iter <= options.max_iterations; ++iter) {
		// two-loop recursion
		direction = -grad;
		const int h = static_cast<int>(history.size());
		for (int i = h - 1; i >= 0; --i) {
			alpha[i] = history[static_cast<std::size_t>(i)].rho *
			           history[static_cast<std::size_t>(i)].s.dot(direction);
			direction -= alpha[i] * history[static_cast<std::size_t>(i)].y;
		}
		if (h > 0) {
			const auto& last = history.back();
			direction *= last.s.dot(last.y) / last.y.squaredNorm();
		}
		for (int i = 0; i < h; ++i) {
			const double beta = history[static_cast<std::size_t>(i)].rho *
			                    history[static_cast<std::size_t>(i)].y.dot(direction);
			direction += (alpha[i] - beta) * history[static_cast<std::size_t>(i)].s;
		}

		double dir_deriv = grad.dot(direction);
		if (!(dir_deriv < 0.0)) {
			// fall back to steepest descent when curvature information is stale
			direction = -grad;
			dir_deriv = -grad.squaredNorm();
		}

		// backtracking Armijo search; non-finite trial values shrink the step
		double step = 1.0;
		double fx_new = std::numeric_limits<double>::quiet_NaN();
		bool accepted = false;
		for (int ls = 0; ls < options.max_line_search_steps; ++ls) {
			x_new = result.x + step * direction;
			fx_new = objective(x_new, grad_new);
			if (std::isfinite(fx_new) && fx_new <= fx + options.armijo_c1 * step * dir_deriv) {
				accepted = true;
				break;
			}
			step *= 0.5;
		}
		if (!accepted) {
			std::ostringstream msg;
			msg << "lbfgs: line search failed at iteration " << iter << " (objective " << fx
			    << ", last trial " << fx_new << ", grad max-norm "
			    << grad.lpNorm<Eigen::Infinity>() << ")";
			throw std::runtime_error(msg.str());
		}

		Correction corr;
		corr.s = x_new - result.x;
		corr.y = grad_new - grad;
		const double sy = corr.s.dot(corr.y);
		if (sy > 1e-12 * corr.s.norm() * corr.y.norm()) {
			corr.rho = 1.0 / sy;
			history.push_back(std::move(corr));
			if (static_cast<int>(history.size()) > options.history) history.pop_front();
		}

		const double prev_fx = fx;
		result.x.swap(x_new);
		grad.swap(grad_new);
		fx = fx_new;
		result.fx = fx;
		result.iterations = iter;
		result.grad_norm = grad.lpNorm<Eigen::Infinity>();

		if (result.grad_norm < options.grad_tolerance) {
			result.converged = true;
			break;
		}
		const double denom = std::max(1.0, std::abs(fx));
		if (std::abs(prev_fx - fx) / denom < options.objective_rel_tolerance) {
			result.converged = true;
			break;
		}
	}
	return result;
}

}  // namespace gamcast
