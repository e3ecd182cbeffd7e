#pragma once

#include "truncmean/linear_core.hpp"

namespace truncmean {

// Exponential correlation family: entry (i, j) is rho^|i-j|, rho in [0, 1).
// Positive definite for every admissible rho, and its inverse is tridiagonal
// with a closed form, which gives an O(n) conditional-parameter path.
struct ExpCorrSpec {
    Index n = 0;
    double rho = 0.0;
};

Matrix build_expcorr(const ExpCorrSpec& spec);

// Closed-form inverse in band form: corner diagonals 1/(1-rho^2), interior
// diagonals (1+rho^2)/(1-rho^2), off-diagonals -rho/(1-rho^2).
TridiagonalPrecision build_expcorr_inverse(const ExpCorrSpec& spec);

}  // namespace truncmean
