#include "truncmean/expcorr.hpp"

#include <cmath>
#include <stdexcept>

namespace truncmean {

namespace {

void validate(const ExpCorrSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("ExpCorrSpec: n must be >= 1");
    if (!(spec.rho >= 0.0 && spec.rho < 1.0)) {
        throw std::invalid_argument("ExpCorrSpec: rho must lie in [0, 1)");
    }
}

}  // namespace

Matrix build_expcorr(const ExpCorrSpec& spec) {
    validate(spec);
    Matrix m(spec.n, spec.n);
    for (Index i = 0; i < spec.n; ++i) {
        for (Index j = 0; j <= i; ++j) {
            const double v = std::pow(spec.rho, static_cast<double>(i - j));
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

TridiagonalPrecision build_expcorr_inverse(const ExpCorrSpec& spec) {
    validate(spec);
    TridiagonalPrecision prec;
    prec.diag = Vector::Ones(spec.n);
    prec.off = Vector::Zero(spec.n > 1 ? spec.n - 1 : 0);
    if (spec.rho == 0.0 || spec.n == 1) return prec;
    const double c = 1.0 / (1.0 - spec.rho * spec.rho);
    prec.diag.setConstant((1.0 + spec.rho * spec.rho) * c);
    prec.diag[0] = c;
    prec.diag[spec.n - 1] = c;
    prec.off.setConstant(-spec.rho * c);
    return prec;
}

}  // namespace truncmean
