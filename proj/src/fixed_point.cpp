#include "truncmean/fixed_point.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "truncmean/errors.hpp"
#include "truncmean/truncated_normal.hpp"

namespace truncmean {

double apply_T_i(Index i, const Vector& x, const ConditionalParams& params,
                 const TruncationBound& bound) {
    return truncated_mean_one_sided(params.conditional_mean(i, x), params.sigma_star(i), bound);
}

void gauss_seidel_sweep_inplace(Vector& w, const ConditionalParams& params,
                                std::span<const TruncationBound> bounds) {
    for (Index i = 0; i < params.size(); ++i) {
        w[i] = apply_T_i(i, w, params, bounds[i]);
    }
}

Vector gauss_seidel_sweep(Vector w, const ConditionalParams& params,
                          std::span<const TruncationBound> bounds) {
    gauss_seidel_sweep_inplace(w, params, bounds);
    return w;
}

Vector default_initial(const ConditionalParams& params, std::span<const TruncationBound> bounds) {
    Vector w(params.size());
    for (Index i = 0; i < params.size(); ++i) {
        const double step = params.sigma_star(i);
        w[i] = bounds[i].side == BoundSide::Left ? bounds[i].cut + step : bounds[i].cut - step;
    }
    return w;
}

SolverTrace solve(const ConditionalParams& params, std::span<const TruncationBound> bounds,
                  const SolverConfig& config) {
    const Index n = params.size();
    if (static_cast<Index>(bounds.size()) != n) {
        throw std::invalid_argument("solve: bounds length does not match dimension");
    }
    if (!(config.tol > 0.0)) throw std::invalid_argument("solve: tol must be > 0");
    if (config.max_iters < 1) throw std::invalid_argument("solve: max_iters must be >= 1");
    if (config.initial && config.initial->size() != n) {
        throw std::invalid_argument("solve: initial iterate has wrong dimension");
    }

    SolverTrace trace;
    trace.modulus = params.dominance();
    if (!trace.modulus.is_dominant) {
        if (config.enforce_dominance) {
            throw NotDominant("solve: precision matrix is not diagonally dominant");
        }
        trace.warning = "precision matrix is not diagonally dominant; convergence not guaranteed";
    }

    Vector w = config.initial ? *config.initial : default_initial(params, bounds);
    trace.iterates.reserve(16);
    trace.iterates.push_back(w);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int t = 1; t <= config.max_iters; ++t) {
        const Vector prev = w;
        gauss_seidel_sweep_inplace(w, params, bounds);
        trace.iterates.push_back(w);
        trace.deltas.push_back((w - prev).lpNorm<1>() * inv_n);
        trace.iterations_used = t;
        if (trace.deltas.back() <= config.tol) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

SolverTrace solve(const Problem& problem, const SolverConfig& config) {
    return solve(problem.conditional_params(), problem.bounds, config);
}

double contraction_ratio(const SolverTrace& trace) {
    if (trace.iterates.size() < 3) {
        throw InsufficientTrace("contraction_ratio: need at least 3 iterates");
    }
    const double floor = 1e3 * std::numeric_limits<double>::epsilon();
    double ratio = 0.0;
    for (std::size_t t = 1; t + 1 < trace.iterates.size(); ++t) {
        const double den =
            (trace.iterates[t] - trace.iterates[t - 1]).lpNorm<Eigen::Infinity>();
        if (den <= floor) continue;
        const double num =
            (trace.iterates[t + 1] - trace.iterates[t]).lpNorm<Eigen::Infinity>();
        ratio = std::max(ratio, num / den);
    }
    return ratio;
}

}  // namespace truncmean
