#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qwoa {

/// Objective: fills grad (same length as x) and returns the cost.
using Objective = std::function<double(const std::vector<double>& x, std::vector<double>& grad)>;

struct Bounds {
    std::vector<double> lo;
    std::vector<double> hi;
};

struct OptimizerConfig {
    int max_iters = 500;     // accepted quasi-Newton steps
    int memory = 10;         // stored curvature pairs
    double grad_tol = 1e-6;  // inf-norm of the projected gradient
    double f_tol = 1e-9;     // relative improvement floor
    std::optional<Bounds> bounds;
};

enum class Termination {
    grad_converged,
    f_converged,
    max_iters,
    line_search_failed,
};

std::string to_string(Termination t);

struct IterationRecord {
    int iteration = 0;
    double cost = 0.0;      // best seen so far (nonincreasing)
    double grad_norm = 0.0; // projected gradient inf-norm at the iterate
    double step = 0.0;      // accepted line-search step length
};

struct OptimizerTrace {
    std::vector<IterationRecord> iterations; // entry 0 is the starting point
    Termination reason = Termination::max_iters;
    int evaluations = 0;
    int accepted_steps = 0;
};

struct MinimizeResult {
    std::vector<double> x_best;
    double f_best = 0.0;
    OptimizerTrace trace;
};

/// Bounded L-BFGS: two-loop recursion directions, strong Wolfe line search
/// (c1 = 1e-4, c2 = 0.9), bounds enforced by projecting the search direction
/// on the active set and clipping trial points. Curvature pairs with
/// y.s <= 1e-12 |y||s| are skipped. Returns the best point seen across all
/// evaluations.
MinimizeResult minimize(const Objective& objective, std::vector<double> x0,
                        const OptimizerConfig& cfg);

} // namespace qwoa
