#include "qwoa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace qwoa {

namespace {

constexpr double kC1 = 1e-4; // Armijo
constexpr double kC2 = 0.9;  // curvature
constexpr int kMaxLineSearchEvals = 25;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

struct Pair {
    std::vector<double> s, y;
    double rho;
};

void clip(std::vector<double>& x, const Bounds& b) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], b.lo[i], b.hi[i]);
}

bool at_lower(double x, const Bounds* b, std::size_t i) { return b && x <= b->lo[i]; }
bool at_upper(double x, const Bounds* b, std::size_t i) { return b && x >= b->hi[i]; }

// Gradient with the components that push against an active bound zeroed.
std::vector<double> projected_gradient(const std::vector<double>& x, const std::vector<double>& g,
                                       const Bounds* b) {
    std::vector<double> pg = g;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (at_lower(x[i], b, i) && g[i] > 0.0) pg[i] = 0.0;
        if (at_upper(x[i], b, i) && g[i] < 0.0) pg[i] = 0.0;
    }
    return pg;
}

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

std::vector<double> two_loop_direction(const std::vector<double>& g,
                                       const std::deque<Pair>& history) {
    std::vector<double> q = g;
    std::vector<double> alpha(history.size());
    for (std::size_t i = history.size(); i-- > 0;) {
        alpha[i] = history[i].rho * dot(history[i].s, q);
        for (std::size_t k = 0; k < q.size(); ++k) q[k] -= alpha[i] * history[i].y[k];
    }
    if (!history.empty()) {
        const Pair& last = history.back();
        const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
        for (double& v : q) v *= gamma;
    }
    for (std::size_t i = 0; i < history.size(); ++i) {
        const double beta = history[i].rho * dot(history[i].y, q);
        for (std::size_t k = 0; k < q.size(); ++k) q[k] += (alpha[i] - beta) * history[i].s[k];
    }
    for (double& v : q) v = -v;
    return q;
}

} // namespace

std::string to_string(Termination t) {
    switch (t) {
        case Termination::grad_converged: return "grad-converged";
        case Termination::f_converged: return "f-converged";
        case Termination::max_iters: return "max-iters";
        case Termination::line_search_failed: return "line-search-failed";
    }
    return "unknown";
}

MinimizeResult minimize(const Objective& objective, std::vector<double> x0,
                        const OptimizerConfig& cfg) {
    const std::size_t dim = x0.size();
    if (dim == 0) throw std::invalid_argument("minimize: empty parameter vector");
    if (cfg.max_iters < 1) throw std::invalid_argument("minimize: max_iters must be >= 1");
    const Bounds* bounds = cfg.bounds ? &*cfg.bounds : nullptr;
    if (bounds) {
        if (bounds->lo.size() != dim || bounds->hi.size() != dim)
            throw std::invalid_argument("minimize: bounds dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) {
            if (bounds->lo[i] > bounds->hi[i])
                throw std::invalid_argument("minimize: lo > hi in bounds");
            if (x0[i] < bounds->lo[i] || x0[i] > bounds->hi[i])
                throw std::invalid_argument("minimize: x0 outside bounds");
        }
    }

    MinimizeResult result;
    OptimizerTrace& trace = result.trace;

    std::vector<double> x = std::move(x0);
    std::vector<double> g(dim);
    double f = objective(x, g);
    ++trace.evaluations;
    if (!std::isfinite(f)) throw std::runtime_error("minimize: objective not finite at x0");

    result.x_best = x;
    result.f_best = f;
    auto note_best = [&](const std::vector<double>& xt, double ft) {
        if (ft < result.f_best) {
            result.f_best = ft;
            result.x_best = xt;
        }
    };

    trace.iterations.push_back({0, f, inf_norm(projected_gradient(x, g, bounds)), 0.0});
    trace.reason = Termination::max_iters;

    std::deque<Pair> history;
    std::vector<double> xt(dim), gt(dim);

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        std::vector<double> pg = projected_gradient(x, g, bounds);
        if (inf_norm(pg) <= cfg.grad_tol) {
            trace.reason = Termination::grad_converged;
            break;
        }

        std::vector<double> d = two_loop_direction(g, history);
        if (bounds) {
            for (std::size_t i = 0; i < dim; ++i) {
                if (at_lower(x[i], bounds, i) && d[i] < 0.0) d[i] = 0.0;
                if (at_upper(x[i], bounds, i) && d[i] > 0.0) d[i] = 0.0;
            }
        }
        double dphi0 = dot(g, d);
        if (!(dphi0 < 0.0)) { // not a descent direction, fall back to steepest
            d = pg;
            for (double& v : d) v = -v;
            dphi0 = -dot(pg, pg);
            if (!(dphi0 < 0.0)) {
                trace.reason = Termination::grad_converged;
                break;
            }
        }

        // Largest step that stays inside the box.
        double alpha_cap = std::numeric_limits<double>::infinity();
        if (bounds) {
            for (std::size_t i = 0; i < dim; ++i) {
                if (d[i] > 0.0) alpha_cap = std::min(alpha_cap, (bounds->hi[i] - x[i]) / d[i]);
                if (d[i] < 0.0) alpha_cap = std::min(alpha_cap, (bounds->lo[i] - x[i]) / d[i]);
            }
            alpha_cap = std::max(alpha_cap, 0.0);
        }

        auto eval_at = [&](double alpha, double& ft) {
            xt = x;
            for (std::size_t i = 0; i < dim; ++i) xt[i] += alpha * d[i];
            if (bounds) clip(xt, *bounds);
            ft = objective(xt, gt);
            ++trace.evaluations;
            if (std::isfinite(ft)) note_best(xt, ft);
        };
        auto armijo = [&](double alpha, double ft) { return ft <= f + kC1 * alpha * dphi0; };
        auto curvature = [&](double) { return std::fabs(dot(gt, d)) <= kC2 * std::fabs(dphi0); };

        // Strong Wolfe: bracketing phase, then bisection zoom.
        bool accepted = false;
        double alpha = std::min(1.0, alpha_cap);
        double alpha_prev = 0.0, f_prev = f;
        double ft = f;
        int ls_evals = 0;
        double lo = 0.0, hi = -1.0, f_lo = f; // hi < 0 means no bracket yet
        const double boundary = alpha_cap * (1.0 - 1e-12);

        while (ls_evals < kMaxLineSearchEvals) {
            eval_at(alpha, ft);
            ++ls_evals;
            if (!std::isfinite(ft)) { // shrink away from bad regions
                alpha = 0.5 * (alpha_prev + alpha);
                continue;
            }
            if (!armijo(alpha, ft) || (ls_evals > 1 && ft >= f_prev)) {
                lo = alpha_prev;
                f_lo = f_prev;
                hi = alpha;
                break;
            }
            if (curvature(alpha)) {
                accepted = true;
                break;
            }
            if (dot(gt, d) >= 0.0) {
                lo = alpha;
                f_lo = ft;
                hi = alpha_prev;
                break;
            }
            if (alpha >= boundary) { // Armijo holds on the box face; take it
                accepted = true;
                break;
            }
            alpha_prev = alpha;
            f_prev = ft;
            alpha = std::min(2.0 * alpha, alpha_cap);
        }

        if (!accepted && hi >= 0.0) { // zoom
            while (ls_evals < kMaxLineSearchEvals) {
                alpha = 0.5 * (lo + hi);
                if (std::fabs(hi - lo) < 1e-14 * std::max(1.0, std::fabs(lo))) break;
                eval_at(alpha, ft);
                ++ls_evals;
                if (!std::isfinite(ft) || !armijo(alpha, ft) || ft >= f_lo) {
                    hi = alpha;
                    continue;
                }
                if (curvature(alpha)) {
                    accepted = true;
                    break;
                }
                if (dot(gt, d) * (hi - lo) >= 0.0) hi = lo;
                lo = alpha;
                f_lo = ft;
            }
            if (!accepted && lo > 0.0 && f_lo < f) { // decrease without curvature
                alpha = lo;
                eval_at(alpha, ft);
                accepted = std::isfinite(ft) && ft < f;
            }
        }

        if (!accepted) {
            trace.reason = Termination::line_search_failed;
            break;
        }

        std::vector<double> s(dim), y(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            s[i] = xt[i] - x[i];
            y[i] = gt[i] - g[i];
        }
        const double f_old = f;
        x = xt;
        f = ft;
        g = gt;
        ++trace.accepted_steps;

        const double ys = dot(y, s);
        if (ys > 1e-12 * norm2(y) * norm2(s)) {
            history.push_back({std::move(s), std::move(y), 1.0 / ys});
            if (static_cast<int>(history.size()) > cfg.memory) history.pop_front();
        }

        trace.iterations.push_back(
            {iter, result.f_best, inf_norm(projected_gradient(x, g, bounds)), alpha});

        const double scale = std::max({std::fabs(f_old), std::fabs(f), 1.0});
        if (f_old - f <= cfg.f_tol * scale) {
            trace.reason = Termination::f_converged;
            break;
        }
    }

    return result;
}

} // namespace qwoa
