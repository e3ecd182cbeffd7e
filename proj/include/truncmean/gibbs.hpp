#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "truncmean/linear_core.hpp"
#include "truncmean/problem.hpp"

namespace truncmean {

struct ChainConfig {
    std::int64_t total_iters = 200000;  // sweeps, including burn-in
    std::int64_t burn_in = 20000;       // leading sweeps discarded
    std::uint64_t seed = 0;
};

struct ChainStats {
    Vector mean_estimate;
    Vector sample_variance;      // per coordinate, unbiased
    std::int64_t sample_count = 0;  // total_iters - burn_in
    std::uint64_t rng_seed_used = 0;

    // Naive i.i.d. standard error sqrt(var / count); ignores chain
    // autocorrelation, so it understates the true Monte Carlo error.
    Vector standard_error() const;
};

// Optional per-sweep observer (t is 1-based); used by diagnostics and tests.
using StateObserver = std::function<void(std::int64_t t, const Vector& state)>;

// Systematic-scan Gibbs sampler over the one-dimensional truncated
// conditionals; coordinates are refreshed in increasing order and the states
// after burn-in are averaged. Bit-reproducible for a fixed (seed, config).
ChainStats gibbs_estimate(const ConditionalParams& params,
                          std::span<const TruncationBound> bounds, const ChainConfig& config,
                          const StateObserver& observer = {});
ChainStats gibbs_estimate(const Problem& problem, const ChainConfig& config,
                          const StateObserver& observer = {});

}  // namespace truncmean
