#include <doctest.h>

#include "gen.hpp"

#include <gjms6/errors.hpp>
#include <gjms6/radial_ops.hpp>

using namespace gjms6;

namespace {

HomogeneousPoly euler(const HomogeneousPoly& p) {
    HomogeneousPoly out(p.dim(), p.degree());
    for (int i = 0; i < p.dim(); ++i) out += HomogeneousPoly::variable(p.dim(), i) * partial(p, i);
    return out;
}

// A_alpha(psi log^j r) by the product rule, independent of the layer calculus.
LogRadialSeries apply_A_oracle(const LogRadialSeries& s, const Rational& alpha) {
    const int n = s.dim();
    LogRadialSeries out(n);
    for (const auto& [key, psi] : s.terms()) {
        const auto [m, j] = key;
        const auto e = euler(psi);
        out.add(m, j, mul_r2(laplacian(psi)) + e * (2 * alpha) + psi * (alpha * (alpha + n - 2)));
        if (j >= 1) out.add(m, j - 1, (e * Rational(2) + psi * Rational(n - 2 + 2 * alpha)) * Rational(j));
        if (j >= 2) out.add(m, j - 2, psi * Rational(j * (j - 1)));
    }
    return out;
}

LogRadialSeries triple_oracle(const LogRadialSeries& s) {
    const int n = s.dim();
    return apply_A_oracle(apply_A_oracle(apply_A_oracle(s, 6 - n), 4 - n), 2 - n);
}

HomogeneousPoly random_harmonic(std::mt19937_64& rng, int n, int d) {
    HomogeneousPoly h(n, d);
    while (h.is_zero()) h = harmonic_decompose(testgen::homogeneous(rng, n, d, 5)).components[0];
    return h;
}

} // namespace

TEST_CASE("eigenvalue examples") {
    const DimRational N = DimRational::n();
    CHECK(eigen_A(6 - N, 0, 0) == 4 * (6 - N));
    CHECK(eigen_B(6 - N, 0) == 10 - N);
    for (int n = 7; n <= 12; ++n) {
        CHECK(eigen_A(Rational(-4), 5, 2, n) == 0);
        CHECK(triple_eigenvalue(n, 0, 0) == 0);
    }
    CHECK(triple_eigenvalue(10, 4, 0) == -184320);
    CHECK(triple_eigenvalue(10, 4, 2) == 0);
    CHECK(triple_eigenvalue(4, 0) == -960 * (N - 6) * (N - 4) * (N - 2));
    CHECK(triple_eigenvalue(4, 1) == -480 * (N - 8) * (N - 6) * (N - 4));
    CHECK(triple_eigenvalue(4, 2) == -192 * (N - 10) * (N - 8) * (N - 6));
}

TEST_CASE("symbolic and numeric eigenvalues agree") {
    for (int n = 7; n <= 14; ++n) {
        for (int m = 0; m <= 8; ++m) {
            for (int i = 0; i <= m / 2; ++i) {
                CHECK(triple_eigenvalue(m, i)(n) == triple_eigenvalue(n, m, i));
                CHECK(b_combination(m, i)(n) == b_combination(n, m, i));
            }
        }
    }
}

TEST_CASE("quoted B-combination values on kernel layers") {
    for (int n = 8; n <= 20; n += 2) {
        CHECK(b_combination(n, n - 6, (n - 6) / 2) == 8 * (n - 2) * (n - 4) * (n - 6));
        CHECK(b_combination(n, n - 4, (n - 6) / 2) == 8 * (n + 2) * n * (n - 2));
        CHECK(b_combination(n, n - 4, (n - 4) / 2) == -4 * n * (n - 2) * (n - 4));
    }
}

TEST_CASE("A acts diagonally on r^{2i} H layers") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const int n = 7 + t % 6;
        const int m = t % 7;
        const int i = (t / 7) % (m / 2 + 1);
        const Rational alpha = testgen::small_rational(rng);
        const auto layer = mul_r2k(random_harmonic(rng, n, m - 2 * i), i);
        LogRadialSeries s(n);
        s.add(m, 0, layer);
        LogRadialSeries want(n);
        want.add(m, 0, layer * eigen_A(alpha, m, i, n));
        CHECK(apply_A_oracle(s, alpha) == want);
    }
}

TEST_CASE("triple log composition matches the product-rule oracle") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 30; ++t) {
        const int n = 7 + t % 6;
        const int m = t % 6;
        LogRadialSeries s(n);
        for (int j = 0; j <= 3; ++j) s.add(m, j, testgen::homogeneous(rng, n, m, 3));
        CHECK(apply_triple_log(s) == triple_oracle(s));
    }
}

TEST_CASE("log composition examples") {
    const int n = 10;
    LogRadialSeries plain(n);
    const auto x1 = HomogeneousPoly::variable(n, 0);
    plain.add(2, 0, x1 * x1);
    const auto plain_out = apply_triple_log(plain);
    for (const auto& [key, psi] : plain_out.terms()) CHECK(key.second == 0);

    LogRadialSeries s(n);
    s.add(4, 1, HomogeneousPoly::r_power(n, 2));
    LogRadialSeries want(n);
    want.add(4, 0, HomogeneousPoly::r_power(n, 2) * Rational(8 * 8 * 6 * 4));
    CHECK(apply_triple_log(s) == want);

    const auto h = x1 * HomogeneousPoly::variable(n, 1);
    LogRadialSeries s2(n);
    s2.add(6, 1, mul_r2k(h, 2));
    LogRadialSeries want2(n);
    want2.add(6, 0, mul_r2k(h, 2) * Rational(8 * 12 * 10 * 8));
    CHECK(apply_triple_log(s2) == want2);
    CHECK(apply_triple_log(s2) == triple_oracle(s2));
}

TEST_CASE("invert_triple examples and round trip") {
    const int n11 = 11;
    std::mt19937_64 rng0(3);
    const auto q = harmonic_decompose(testgen::homogeneous(rng0, n11, 4, 6)).components[0];
    auto inv = invert_triple(q, n11);
    CHECK(inv.psi == q * (Rational(-1) / triple_eigenvalue(n11, 4, 0)));
    CHECK(inv.log_terms.empty());

    const int n = 10;
    inv = invert_triple(HomogeneousPoly::r_power(n, 2), n);
    CHECK(inv.psi.is_zero());
    REQUIRE(inv.log_terms.size() == 1);
    CHECK(inv.log_terms[0].first == 1);
    CHECK(inv.log_terms[0].second == HomogeneousPoly::r_power(n, 2) * make_rational(-1, 1536));

    inv = invert_triple(HomogeneousPoly(n, 4), n);
    CHECK(inv.psi.is_zero());
    CHECK(inv.log_terms.empty());

    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
        const int nn = 7 + t % 8;
        const int m = 1 + t % 8;
        const auto rhs = testgen::homogeneous(rng, nn, m, 4);
        const auto r = invert_triple(rhs, nn);
        LogRadialSeries u(nn);
        u.add(m, 0, r.psi);
        for (const auto& [j, p] : r.log_terms) u.add(m, j, p);
        LogRadialSeries total = apply_triple_log(u);
        total.add(m, 0, rhs);
        CHECK(total.is_zero());
    }
}

TEST_CASE("layered solve with log data") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        const int n = 8 + 2 * (t % 4);  // even: kernel layers present
        const int m = n - 6 + t % 3;
        std::map<int, HomogeneousPoly> g;
        for (int j = 0; j <= 2; ++j) g.emplace(j, testgen::homogeneous(rng, n, m, 3));
        const auto u = solve_triple(g, n, m);
        LogRadialSeries s(n);
        for (const auto& [j, p] : u) s.add(m, j, p);
        LogRadialSeries total = apply_triple_log(s);
        for (const auto& [j, p] : g) total.add(m, j, p);
        CHECK(total.is_zero());
        CHECK(s.max_log_power() <= 3);
    }
}

TEST_CASE("kernel census: first kernel layer at m = n-6") {
    for (int n = 7; n <= 20; ++n) {
        int first = -1, first_i = -1;
        for (int m = 1; m <= 2 * n && first < 0; ++m) {
            for (int i = 0; i <= m / 2; ++i) {
                if (triple_eigenvalue(n, m, i) == 0) {
                    first = m;
                    first_i = i;
                    break;
                }
            }
        }
        if (n % 2 == 0) {
            CHECK(first == n - 6);
            CHECK(first_i == (n - 6) / 2);
            CHECK(6 - n + 2 * first_i == 0);
        } else {
            CHECK(first == -1);
        }
    }
}
