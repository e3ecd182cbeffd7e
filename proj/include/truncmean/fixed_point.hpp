#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "truncmean/linear_core.hpp"
#include "truncmean/problem.hpp"

namespace truncmean {

struct SolverConfig {
    double tol = 1e-10;       // threshold on |w(t) - w(t-1)|_1 / n
    int max_iters = 500;
    std::optional<Vector> initial;  // default: cut +/- one conditional sigma
    bool enforce_dominance = false;
};

struct SolverTrace {
    std::vector<Vector> iterates;  // w(0), w(1), ..., w(T)
    std::vector<double> deltas;    // |w(t) - w(t-1)|_1 / n for t = 1..T
    DominanceReport modulus;
    bool converged = false;
    int iterations_used = 0;
    std::string warning;  // non-empty when iterating without dominance

    const Vector& fixed_point() const { return iterates.back(); }
};

// Coordinate update: the exact mean of the i-th one-dimensional conditional,
// truncated to its bound, with the other coordinates held at x.
double apply_T_i(Index i, const Vector& x, const ConditionalParams& params,
                 const TruncationBound& bound);

// One Gauss-Seidel pass: coordinates updated in increasing order, each new
// value visible to the updates that follow it within the same pass.
void gauss_seidel_sweep_inplace(Vector& w, const ConditionalParams& params,
                                std::span<const TruncationBound> bounds);
Vector gauss_seidel_sweep(Vector w, const ConditionalParams& params,
                          std::span<const TruncationBound> bounds);

// Default start: one conditional standard deviation inside the support.
Vector default_initial(const ConditionalParams& params,
                       std::span<const TruncationBound> bounds);

// Iterate sweeps until the per-coordinate l1 change drops to tol or the
// iteration budget runs out (converged=false in that case, no throw).
// With enforce_dominance set, refuses non-dominant precisions up front;
// otherwise they run with a warning recorded in the trace.
SolverTrace solve(const ConditionalParams& params, std::span<const TruncationBound> bounds,
                  const SolverConfig& config = {});
SolverTrace solve(const Problem& problem, const SolverConfig& config = {});

// Largest observed ratio of successive iterate changes in the max norm,
// skipping steps whose denominator sits at the floating-point noise floor.
// Under strict dominance this never exceeds the contraction modulus.
double contraction_ratio(const SolverTrace& trace);

}  // namespace truncmean
