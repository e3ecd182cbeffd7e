#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "truncmean/fixed_point.hpp"
#include "truncmean/gibbs.hpp"
#include "truncmean/problem.hpp"

namespace truncmean {

// Random instance with a strictly diagonally dominant precision matrix:
// symmetric uniform off-diagonals, diagonals scaled so every row modulus
// equals a target drawn from [0.3, 0.9] (such a matrix is positive definite),
// then a global rescale to desk-scale marginals (largest sd in [0.2, 0.4],
// matching the bundled 5-d regression instance). Componentwise uniform mean
// in [-10, 10]; left cuts at mu_i - u_i * sd_i with u_i uniform in [0, 1.5].
// Deterministic under the seed.
Problem generate_dominant_problem(Index n, std::uint64_t seed);

// One cell of the accuracy sweep over the exponential-correlation family:
// zero mean, common left cut a, solver and sampler run on the same instance.
// delta is the coordinate-mean gap |w_solver - w_mcmc|_2 / n.
struct SweepCell {
    double rho = 0.0;
    double a = 0.0;
    Index n = 0;
    double delta = 0.0;
    int solver_iterations = 0;
    bool ok = false;
    std::string error;
};

// Runs every (rho, a) combination; failures are recorded per cell and the
// sweep continues. Chain seeds are derived per cell from config.seed, so the
// output is independent of evaluation order.
std::vector<SweepCell> run_sweep(Index n, std::span<const double> rho_grid,
                                 std::span<const double> a_grid, const SolverConfig& solver,
                                 const ChainConfig& chain);

// Solver-vs-sampler agreement on random dominant instances: for each
// dimension, `trials` instances, averaging the per-coordinate gap.
struct CompareRow {
    Index n = 0;
    int trials = 0;
    double mean_delta = 0.0;  // average of |w_solver - w_mcmc|_2 / n
};

std::vector<CompareRow> run_compare(Index dim_lo, Index dim_hi, int trials,
                                    const SolverConfig& solver, const ChainConfig& chain);

}  // namespace truncmean
