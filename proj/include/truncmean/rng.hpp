#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "truncmean/special_functions.hpp"

namespace truncmean {

// splitmix64 finalizer; scrambles (seed, stream) pairs into engine seeds so
// that nearby user seeds and stream ids give decorrelated sequences.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive a child seed from a parent seed and up to three stream coordinates.
// Used by the experiment drivers: one stream per chain / per cell, so results
// do not depend on execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t s0,
                                 std::uint64_t s1 = 0, std::uint64_t s2 = 0) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ mix64(s0 + 0x1000000001ULL));
    h = mix64(h ^ mix64(s1 + 0x2000000002ULL));
    h = mix64(h ^ mix64(s2 + 0x3000000003ULL));
    return h;
}

// Deterministic 64-bit generator (mt19937_64 core with splitmix64 seeding).
// All floating-point draws are derived from raw 64-bit words in-house, so a
// given (seed, stream) reproduces bit-identical sequences on any platform.
// One Rng per logical stream; a single instance is not thread-safe.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(derive_seed(seed, stream)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform strictly inside (0, 1): (k + 1/2) / 2^53 on 53 random bits.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Unit-rate exponential.
    double exponential() { return -std::log(uniform01()); }

    // Standard normal via the quantile (exact inverse-cdf draw).
    double standard_normal() { return norm_quantile(uniform01()); }

private:
    std::mt19937_64 engine_;
};

}  // namespace truncmean
