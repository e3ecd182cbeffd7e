#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "truncmean/errors.hpp"
#include "truncmean/special_functions.hpp"
#include "truncmean/truncated_normal.hpp"

using namespace truncmean;

namespace {
constexpr double kHalfNormalMean = 0.79788456080286535588;  // sqrt(2/pi)
}

TEST_CASE("one-sided mean pins") {
    CHECK(truncated_mean_one_sided(0.0, 1.0, TruncationBound::left(0.0)) ==
          doctest::Approx(kHalfNormalMean).epsilon(1e-14));
    CHECK(truncated_mean_one_sided(0.0, 1.0, TruncationBound::right(0.0)) ==
          doctest::Approx(-kHalfNormalMean).epsilon(1e-14));
}

TEST_CASE("one-sided mean against quadrature") {
    for (double a : {-3.0, -1.0, 1.0, 3.0}) {
        const double w = truncated_mean_one_sided(0.0, 1.0, TruncationBound::left(a));
        CHECK(w == doctest::Approx(testsup::oracle_mean_left(0.0, 1.0, a)).epsilon(1e-9));
    }
    // non-standard location/scale
    const double w = truncated_mean_one_sided(-1.3, 0.4, TruncationBound::left(-1.0));
    CHECK(w == doctest::Approx(testsup::oracle_mean_left(-1.3, 0.4, -1.0)).epsilon(1e-9));
}

TEST_CASE("one-sided mean sits strictly inside the support") {
    Rng rng(91);
    for (int k = 0; k < 500; ++k) {
        const double mu = 10.0 * (rng.uniform01() - 0.5);
        const double sigma = 0.1 + 3.0 * rng.uniform01();
        const double cut = mu + 12.0 * (rng.uniform01() - 0.5) * sigma;
        CHECK(truncated_mean_one_sided(mu, sigma, TruncationBound::left(cut)) > cut);
        CHECK(truncated_mean_one_sided(mu, sigma, TruncationBound::right(cut)) < cut);
    }
    // deep tail: cut far above the location
    CHECK(truncated_mean_one_sided(0.0, 1.0, TruncationBound::left(25.0)) > 25.0);
}

TEST_CASE("one-sided mean is monotone in mu and in the cut") {
    double prev = truncated_mean_one_sided(-5.0, 1.0, TruncationBound::left(0.0));
    for (double mu = -4.9; mu <= 5.0; mu += 0.1) {
        const double w = truncated_mean_one_sided(mu, 1.0, TruncationBound::left(0.0));
        CHECK(w > prev);
        prev = w;
    }
    prev = truncated_mean_one_sided(0.0, 1.0, TruncationBound::left(-5.0));
    for (double a = -4.9; a <= 5.0; a += 0.1) {
        const double w = truncated_mean_one_sided(0.0, 1.0, TruncationBound::left(a));
        CHECK(w > prev);
        prev = w;
    }
}

TEST_CASE("reflection symmetry of the two sides") {
    Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        const double mu = 8.0 * (rng.uniform01() - 0.5);
        const double sigma = 0.2 + 2.0 * rng.uniform01();
        const double b = mu + 8.0 * (rng.uniform01() - 0.5) * sigma;
        const double right = truncated_mean_one_sided(mu, sigma, TruncationBound::right(b));
        const double left = truncated_mean_one_sided(-mu, sigma, TruncationBound::left(-b));
        CHECK(right == doctest::Approx(-left).epsilon(1e-14));
    }
}

TEST_CASE("two-sided mean") {
    // symmetric interval around the mean
    for (double c : {0.5, 1.0, 2.5}) {
        CHECK(truncated_mean_two_sided(0.0, 1.0, -c, c) == doctest::Approx(0.0));
    }
    // quadrature oracle
    CHECK(truncated_mean_two_sided(2.0, 0.5, 1.5, 3.0) ==
          doctest::Approx(2.1148185895456644843).epsilon(1e-9));
    CHECK(truncated_mean_two_sided(2.0, 0.5, 1.5, 3.0) ==
          doctest::Approx(testsup::oracle_mean_two_sided(2.0, 0.5, 1.5, 3.0)).epsilon(1e-9));
    // result stays inside (a, b)
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
        const double mu = 6.0 * (rng.uniform01() - 0.5);
        const double sigma = 0.2 + 2.0 * rng.uniform01();
        const double a = mu - 4.0 * sigma * rng.uniform01();
        const double b = a + sigma * (0.1 + 4.0 * rng.uniform01());
        const double w = truncated_mean_two_sided(mu, sigma, a, b);
        CHECK(w > a);
        CHECK(w < b);
    }
}

TEST_CASE("two-sided approaches one-sided as the interval opens up") {
    for (double a : {-2.0, 0.0, 1.5}) {
        const double one = truncated_mean_one_sided(0.3, 1.1, TruncationBound::left(a));
        const double two = truncated_mean_two_sided(0.3, 1.1, a, a + 40.0 * 1.1);
        CHECK(std::fabs(one - two) < 1e-12);
    }
}

TEST_CASE("two-sided degenerate interval throws") {
    CHECK_THROWS_AS((void)truncated_mean_two_sided(0.0, 1.0, 45.0, 46.0), DegenerateInterval);
    CHECK_THROWS_AS((void)truncated_mean_two_sided(0.0, 1.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)truncated_mean_two_sided(0.0, -1.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("sampler respects the support") {
    Rng rng(1234);
    for (int k = 0; k < 20000; ++k) {
        CHECK(sample_truncated(0.0, 1.0, TruncationBound::left(1.5), rng) >= 1.5);
    }
    for (int k = 0; k < 20000; ++k) {
        CHECK(sample_truncated(2.0, 0.5, TruncationBound::right(1.0), rng) <= 1.0);
    }
}

TEST_CASE("sampler mean and variance match the exact moments") {
    Rng rng(99);
    const int n = 1000000;
    double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = sample_truncated(0.0, 1.0, TruncationBound::left(0.0), rng);
        sum += x;
    }
    const double mean = sum / n;
    CHECK(std::fabs(mean - kHalfNormalMean) < 0.003);  // ~5 sigma of the MC error

    // second pass accumulating central moments against the quadrature oracle
    Rng rng2(100);
    const double exact_mean = testsup::oracle_mean_left(0.0, 1.0, 0.0);
    const double exact_var = testsup::oracle_var_left(0.0, 1.0, 0.0);
    sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = sample_truncated(0.0, 1.0, TruncationBound::left(0.0), rng2);
        const double d = x - exact_mean;
        sum += d;
        sum2 += d * d;
        sum4 += d * d * d * d;
    }
    const double m2 = sum2 / n;
    const double m4 = sum4 / n;
    const double se_var = std::sqrt(std::max(m4 - m2 * m2, 0.0) / n);
    CHECK(std::fabs(m2 - exact_var) <= 4.0 * se_var + 1e-6);
}

TEST_CASE("sampler far-tail draws agree with the exact mean") {
    Rng rng(7);
    const int n = 100000;
    double sum = 0.0, sum2 = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = sample_truncated(0.0, 1.0, TruncationBound::left(6.0), rng);
        CHECK(x >= 6.0);
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(std::max(sum2 / n - mean * mean, 0.0));
    const double exact = truncated_mean_one_sided(0.0, 1.0, TruncationBound::left(6.0));
    CHECK(std::fabs(mean - exact) <= 4.0 * sd / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("sampler is deterministic under a fixed seed") {
    Rng a(42), b(42);
    for (int k = 0; k < 1000; ++k) {
        const double xa = sample_truncated(0.3, 1.7, TruncationBound::left(0.1), a);
        const double xb = sample_truncated(0.3, 1.7, TruncationBound::left(0.1), b);
        CHECK(xa == xb);
    }
}
