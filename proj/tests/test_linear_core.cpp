#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "truncmean/errors.hpp"
#include "truncmean/expcorr.hpp"
#include "truncmean/linear_core.hpp"

using namespace truncmean;

TEST_CASE("invert_spd identity and residual") {
    const Matrix eye = Matrix::Identity(4, 4);
    CHECK((invert_spd(eye) - eye).cwiseAbs().maxCoeff() == 0.0);

    Rng rng(11);
    const Matrix s = testsup::random_spd(6, rng);
    const Matrix inv = invert_spd(s);
    CHECK(((s * inv) - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("invert_spd matches the closed-form exponential-correlation inverse") {
    const ExpCorrSpec spec{4, 0.5};
    const Matrix inv = invert_spd(build_expcorr(spec));
    const Matrix closed = build_expcorr_inverse(spec).dense();
    CHECK((inv - closed).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("invert_spd rejects bad input") {
    Matrix notpd = Matrix::Identity(3, 3);
    notpd(2, 2) = -1.0;
    CHECK_THROWS_AS((void)invert_spd(notpd), NotPositiveDefinite);

    Matrix asym = Matrix::Zero(2, 2);
    asym << 1.0, 0.5, -0.5, 1.0;
    CHECK_THROWS_AS((void)invert_spd(asym), std::invalid_argument);
}

TEST_CASE("conditional params: diagonal covariance decouples") {
    Vector mu(3);
    mu << 1.0, -2.0, 0.5;
    Vector v(3);
    v << 0.25, 4.0, 1.0;
    const auto p = conditional_params(mu, Matrix(v.asDiagonal()));
    for (Index i = 0; i < 3; ++i) {
        CHECK(p.sigma_star(i) == doctest::Approx(std::sqrt(v[i])).epsilon(1e-14));
        CHECK(p.coupling_l1(i) == 0.0);
        Vector x = Vector::Random(3);
        CHECK(p.conditional_mean(i, x) == mu[i]);
    }
}

TEST_CASE("conditional params: 2x2 correlation closed form") {
    const double rho = 0.35;
    Matrix s(2, 2);
    s << 1.0, rho, rho, 1.0;
    Vector mu = Vector::Zero(2);
    const auto p = conditional_params(mu, s);
    for (Index i = 0; i < 2; ++i) {
        CHECK(p.sigma_star(i) == doctest::Approx(std::sqrt(1.0 - rho * rho)).epsilon(1e-12));
        const Vector row = p.coupling_row(i);
        CHECK(row[1 - i] == doctest::Approx(rho).epsilon(1e-12));
        CHECK(row[i] == 0.0);
    }
}

TEST_CASE("Schur-complement identities against explicit submatrix inversion") {
    Rng rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        const Index n = 2 + static_cast<Index>(rng.next_u64() % 7);  // 2..8
        const Matrix sigma = testsup::random_spd(n, rng);
        const Matrix prec = invert_spd(sigma);
        Vector mu(n);
        for (Index i = 0; i < n; ++i) mu[i] = rng.standard_normal();
        const auto p = ConditionalParams::from_precision(mu, prec);

        for (Index i = 0; i < n; ++i) {
            // assemble Sigma with row/column i removed and the i-th column stub
            Matrix sub(n - 1, n - 1);
            Vector cross(n - 1);
            Index r = 0;
            for (Index a = 0; a < n; ++a) {
                if (a == i) continue;
                cross[r] = sigma(a, i);
                Index c = 0;
                for (Index b = 0; b < n; ++b) {
                    if (b == i) continue;
                    sub(r, c++) = sigma(a, b);
                }
                ++r;
            }
            const Matrix sub_inv = sub.inverse();
            const double schur = sigma(i, i) - cross.dot(sub_inv * cross);

            // conditional variance equals the Schur complement,
            // i.e. 1/sigma_star^2 equals the precision diagonal
            const double sstar2 = p.sigma_star(i) * p.sigma_star(i);
            CHECK(std::fabs(sstar2 - schur) <= 1e-9 * std::fabs(schur));
            CHECK(std::fabs(1.0 / sstar2 - prec(i, i)) <= 1e-9 * prec(i, i));

            // coupling row equals cross^T sub_inv
            const Vector expected_compact = sub_inv * cross;
            const Vector row = p.coupling_row(i);
            Index k = 0;
            double scale = std::max(1.0, expected_compact.cwiseAbs().maxCoeff());
            for (Index a = 0; a < n; ++a) {
                if (a == i) continue;
                CHECK(std::fabs(row[a] - expected_compact[k]) <= 1e-9 * scale);
                ++k;
            }
        }
    }
}

TEST_CASE("dominance report basics") {
    CHECK(dominance_report(Matrix::Identity(5, 5)).is_dominant);
    CHECK(dominance_report(Matrix::Identity(5, 5)).modulus == 0.0);

    // closed-form inverse rows: interior modulus 2 rho / (1 + rho^2)
    for (double rho : {0.1, 0.5, 0.9}) {
        const auto rep = dominance_report(build_expcorr_inverse(ExpCorrSpec{6, rho}).dense());
        CHECK(rep.is_dominant);
        CHECK(rep.modulus == doctest::Approx(2.0 * rho / (1.0 + rho * rho)).epsilon(1e-12));
    }

    Matrix zero_diag = Matrix::Zero(2, 2);
    zero_diag(0, 1) = 1.0;
    zero_diag(1, 0) = 1.0;
    CHECK_THROWS_AS((void)dominance_report(zero_diag), ZeroDiagonal);
}

TEST_CASE("dominance report flags the violated rows of a hard instance") {
    // precision with one dominant row and two strongly violated ones
    Matrix prec(3, 3);
    prec << 7.904, 3.365, -4.116,
        3.365, 2.352, -1.735,
        -4.116, -1.735, 2.513;
    const auto rep = dominance_report(prec);
    CHECK(!rep.is_dominant);
    CHECK(rep.modulus > 2.0);
    // rows 1 and 2 violate; row 0 does not
    CHECK(std::fabs(prec(0, 1)) + std::fabs(prec(0, 2)) < prec(0, 0));
    CHECK(std::fabs(prec(1, 0)) + std::fabs(prec(1, 2)) > prec(1, 1));
    CHECK(std::fabs(prec(2, 0)) + std::fabs(prec(2, 1)) > prec(2, 2));
    CHECK(rep.worst_row == 2);
}

TEST_CASE("dominance modulus equals the largest coupling-row l1 norm") {
    Rng rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix sigma = testsup::random_spd(5, rng);
        const Matrix prec = invert_spd(sigma);
        const auto report = dominance_report(prec);
        const auto params = ConditionalParams::from_precision(Vector::Zero(5), prec);
        double max_l1 = 0.0;
        for (Index i = 0; i < 5; ++i) max_l1 = std::max(max_l1, params.coupling_l1(i));
        CHECK(report.modulus == doctest::Approx(max_l1).epsilon(1e-12));
        CHECK(params.dominance().modulus == doctest::Approx(max_l1).epsilon(1e-15));
    }
}

TEST_CASE("banded and dense conditional parameters coincide") {
    const Index n = 50;
    for (double rho : {0.2, 0.7}) {
        const ExpCorrSpec spec{n, rho};
        Vector mu(n);
        Rng rng(41);
        for (Index i = 0; i < n; ++i) mu[i] = rng.standard_normal();
        const auto banded =
            ConditionalParams::from_tridiagonal_precision(mu, build_expcorr_inverse(spec));
        const auto dense =
            ConditionalParams::from_precision(mu, build_expcorr_inverse(spec).dense());
        CHECK(banded.banded());
        Vector x(n);
        for (Index i = 0; i < n; ++i) x[i] = rng.standard_normal();
        for (Index i = 0; i < n; ++i) {
            CHECK(banded.sigma_star(i) == doctest::Approx(dense.sigma_star(i)).epsilon(1e-14));
            CHECK(std::fabs(banded.conditional_mean(i, x) - dense.conditional_mean(i, x)) <
                  1e-10);
            CHECK((banded.coupling_row(i) - dense.coupling_row(i)).cwiseAbs().maxCoeff() <
                  1e-14);
        }
    }
}
