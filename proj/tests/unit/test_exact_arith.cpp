#include <doctest.h>

#include "gen.hpp"

#include <gjms6/beta_ratio.hpp>
#include <gjms6/dim_rational.hpp>
#include <gjms6/errors.hpp>

using namespace gjms6;

namespace {
const DimRational N = DimRational::n();
}

TEST_CASE("dim_eval substitutes exactly") {
    const DimRational q = N * (pow(N, 4) - 20 * pow(N, 2) + 64) / 32;
    CHECK(q(7) == make_rational(10395, 32));
    CHECK(((N - 6) / 2)(6) == 0);
    CHECK_THROWS_AS((DimRational(1) / (N - 4))(4), PoleError);
}

TEST_CASE("canonical form: monic denominator, cancelled gcd") {
    const DimRational a = (2 * N - 8) / (6 * N * N - 24 * N);  // (2n-8)/(6n(n-4)) = 1/(3n)
    CHECK(a == DimRational(1) / (3 * N));
    CHECK(a.den().leading() == 1);
    CHECK(a.den().degree() == 1);
    CHECK(((N - 10) / N).str() == "(n-10)/(n)");
}

TEST_CASE("DimRational field axioms on random inputs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const DimRational a = testgen::dim_rational(rng);
        DimRational b = testgen::dim_rational(rng);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        for (long n : {7L, 11L, 23L}) {
            try {
                CHECK((a * b)(n) == a(n) * b(n));
                CHECK((a + b)(n) == a(n) + b(n));
            } catch (const PoleError&) {
            }
        }
    }
}

TEST_CASE("quoted Beta ratios") {
    // offsets are half-steps from n/2
    CHECK(beta_ratio(0, -8, 2, -10) == (N - 10) / N);
    CHECK(beta_ratio(2, -8, 2, -10) == (N / 2 - 5) / (N - 4));
    CHECK(beta_ratio(2, -6, 2, -10) == (N / 2 - 4) * (N / 2 - 5) / ((N - 3) * (N - 4)));
    CHECK(beta_relative(2, -10).relative_to_reference == DimRational(1));
}

TEST_CASE("Beta ratio agrees with lgamma at integer n") {
    auto beta = [](double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); };
    for (int n : {11, 12, 15}) {
        const double x = n / 2.0;
        const double want = beta(x + 1.5, x - 2.5) / beta(x - 0.5, x + 0.5);
        const Rational got = beta_ratio(3, -5, -1, 1)(n);
        CHECK(got.get_d() == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("Beta ratio cocycle and inexact rejection") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> off(-6, 6);
    for (int t = 0; t < 50; ++t) {
        const int a1 = 2 * off(rng), b1 = 2 * off(rng) + 1;
        const int a2 = 2 * off(rng), b2 = 2 * off(rng) + 1;
        const int a3 = 2 * off(rng), b3 = 2 * off(rng) + 1;
        CHECK(beta_ratio(a1, b1, a2, b2) * beta_ratio(a2, b2, a3, b3) == beta_ratio(a1, b1, a3, b3));
    }
    CHECK_THROWS_AS(beta_ratio(1, 0, 0, 0), InexactBetaRatio);
    CHECK_THROWS_AS(beta_ratio(0, 0, 0, 3), InexactBetaRatio);
}
