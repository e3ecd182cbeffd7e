#include "truncmean/gibbs.hpp"

#include <cmath>
#include <stdexcept>

#include "truncmean/fixed_point.hpp"
#include "truncmean/rng.hpp"
#include "truncmean/truncated_normal.hpp"

namespace truncmean {

Vector ChainStats::standard_error() const {
    if (sample_count < 1) return Vector::Zero(mean_estimate.size());
    return (sample_variance / static_cast<double>(sample_count)).cwiseSqrt();
}

ChainStats gibbs_estimate(const ConditionalParams& params,
                          std::span<const TruncationBound> bounds, const ChainConfig& config,
                          const StateObserver& observer) {
    const Index n = params.size();
    if (static_cast<Index>(bounds.size()) != n) {
        throw std::invalid_argument("gibbs_estimate: bounds length does not match dimension");
    }
    if (config.total_iters < 1 || config.burn_in < 0 || config.burn_in >= config.total_iters) {
        throw std::invalid_argument("gibbs_estimate: requires 0 <= burn_in < total_iters");
    }

    Rng rng(config.seed);
    Vector x = default_initial(params, bounds);

    // Welford accumulators over the post-burn-in states.
    Vector mean = Vector::Zero(n);
    Vector m2 = Vector::Zero(n);
    std::int64_t count = 0;

    for (std::int64_t t = 1; t <= config.total_iters; ++t) {
        for (Index i = 0; i < n; ++i) {
            x[i] = sample_truncated(params.conditional_mean(i, x), params.sigma_star(i),
                                    bounds[i], rng);
        }
        if (observer) observer(t, x);
        if (t <= config.burn_in) continue;
        ++count;
        for (Index i = 0; i < n; ++i) {
            const double d = x[i] - mean[i];
            mean[i] += d / static_cast<double>(count);
            m2[i] += d * (x[i] - mean[i]);
        }
    }

    ChainStats stats;
    stats.mean_estimate = mean;
    stats.sample_variance =
        count > 1 ? Vector(m2 / static_cast<double>(count - 1)) : Vector(Vector::Zero(n));
    stats.sample_count = count;
    stats.rng_seed_used = config.seed;
    return stats;
}

ChainStats gibbs_estimate(const Problem& problem, const ChainConfig& config,
                          const StateObserver& observer) {
    return gibbs_estimate(problem.conditional_params(), problem.bounds, config, observer);
}

}  // namespace truncmean
