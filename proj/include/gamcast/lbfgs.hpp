// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <Eigen/Dense>
#include <functional>

namespace gamcast {

struct LbfgsOptions {
	int max_iterations = 2000;
	double grad_tolerance = 1e-6;       // max-norm of the gradient
	double objective_rel_tolerance = 1e-9;
	int history = 10;
	int max_line_search_steps = 60;
	double armijo_c1 = 1e-4;
};

struct LbfgsResult {
	Eigen::VectorXd x;
	double fx = 0.0;
	int iterations = 0;
	bool converged = false;
	double grad_norm = 0.0;
};

/// Objective callback: returns f(x) and fills grad with the gradient.
using ObjectiveFn = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

/// Limited-memory BFGS descent with backtracking Armijo line search.
/// Non-finite trial values are treated as rejected steps; a line search that
/// cannot find a finite decrease throws with a diagnostic. Converges when the
/// gradient max-norm or the relative objective change drops below tolerance.
LbfgsResult lbfgs_minimize(const ObjectiveFn& objective, Eigen::VectorXd x0,
                           const LbfgsOptions& options = {});

}  // namespace gamcast
