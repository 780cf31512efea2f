#include <doctest.h>

#include <gjms6/errors.hpp>
#include <gjms6/weyl.hpp>

#include <numeric>
#include <random>

using namespace gjms6;

namespace {

// Direct contraction with the polynomial product, no integer tricks.
HomogeneousPoly quartic_oracle(const WeylTensor& w) {
    const int n = w.dim();
    HomogeneousPoly out(n, 4);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            HomogeneousPoly q(n, 2);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    q += HomogeneousPoly::variable(n, i) * HomogeneousPoly::variable(n, j) * w(i, k, l, j);
            out += q * q;
        }
    return out;
}

HomogeneousPoly vector_oracle(const WeylTensor& w) {
    const int n = w.dim();
    HomogeneousPoly out(n, 2);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int s = 0; s < n; ++s) {
                HomogeneousPoly v(n, 1);
                for (int i = 0; i < n; ++i) v += HomogeneousPoly::variable(n, i) * (w(i, k, l, s) + w(i, l, k, s));
                out += v * v;
            }
    return out;
}

// p(y) with y_{perm[i]} = sign[i] x_i.
HomogeneousPoly substitute(const HomogeneousPoly& p, const std::vector<int>& perm, const std::vector<int>& sign) {
    const int n = p.dim();
    HomogeneousPoly out(n, p.degree());
    for (const auto& [e, c] : p.terms()) {
        Exponent f(static_cast<std::size_t>(n), 0);
        Rational coef = c;
        for (int i = 0; i < n; ++i) {
            const int power = e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            f[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
            if (sign[static_cast<std::size_t>(i)] < 0 && power % 2 == 1) coef = -coef;
        }
        out.add_term(f, coef);
    }
    return out;
}

} // namespace

TEST_CASE("random_weyl satisfies every invariant and is deterministic") {
    for (int n = 4; n <= 9; ++n) {
        for (std::uint64_t seed : {1u, 2u, 77u}) {
            const auto w = random_weyl(n, seed);
            std::string why;
            CHECK_MESSAGE(check_weyl_invariants(w, &why), why);
            CHECK_FALSE(w.is_zero());
            const auto again = random_weyl(n, seed);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) CHECK(w(i, j, 0, 1) == again(i, j, 0, 1));
        }
    }
    CHECK_THROWS_AS(random_weyl(3, 1), std::invalid_argument);
}

TEST_CASE("a tensor with Riemann symmetries but nonzero trace is rejected") {
    const int n = 5;
    // Constant curvature: pure trace.
    const auto w = WeylTensor::from_function(n, [](int i, int j, int k, int l) -> Rational {
        return Rational((i == k) * (j == l) - (i == l) * (j == k));
    });
    std::string why;
    CHECK_FALSE(check_weyl_invariants(w, &why));
    CHECK(why == "nonzero trace");
}

TEST_CASE("contraction identities") {
    for (int n = 4; n <= 10; ++n) {
        const auto w = random_weyl(n, 100 + n);
        const auto s = contraction_sums(w);
        CHECK(s.pair_sum_sq == 3 * s.norm_sq);
        CHECK(s.cross == s.norm_sq / 2);
        CHECK(s.norm_sq == norm_sq(w));
    }
}

TEST_CASE("quartic and vector forms against direct contraction") {
    for (int n = 4; n <= 7; ++n) {
        const auto w = random_weyl(n, 5 * n);
        CHECK(quartic_form(w) == quartic_oracle(w));
        CHECK(vector_form(w) == vector_oracle(w));
    }
    // Rational entries exercise the common-denominator path.
    const auto w = random_weyl(5, 9);
    const auto scaled = WeylTensor::from_function(5, [&](int i, int j, int k, int l) -> Rational { return w(i, j, k, l) * make_rational(2, 7); });
    CHECK(quartic_form(scaled) == quartic_oracle(scaled));
    CHECK(quartic_form(scaled) == quartic_form(w) * make_rational(4, 49));
}

TEST_CASE("Laplacian identities of the forms") {
    for (int n = 4; n <= 12; ++n) {
        const auto w = random_weyl(n, 7 + n);
        const auto q = quartic_form(w);
        const auto v = vector_form(w);
        CHECK(laplacian(q) == v * Rational(2));
        CHECK(laplacian(v) == HomogeneousPoly::constant(n, 6 * norm_sq(w)));
    }
}

TEST_CASE("forms are invariant under signed permutations") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 6; ++t) {
        const int n = 5 + t % 4;
        const auto w = random_weyl(n, 300 + t);
        std::vector<int> perm(static_cast<std::size_t>(n)), sign(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& s : sign) s = (rng() & 1) ? 1 : -1;
        auto sg = [&](int i) { return sign[static_cast<std::size_t>(i)]; };
        auto pm = [&](int i) { return perm[static_cast<std::size_t>(i)]; };
        const auto rotated = WeylTensor::from_function(n, [&](int i, int j, int k, int l) -> Rational {
            return w(pm(i), pm(j), pm(k), pm(l)) * (sg(i) * sg(j) * sg(k) * sg(l));
        });
        CHECK(check_weyl_invariants(rotated));
        CHECK(norm_sq(rotated) == norm_sq(w));
        CHECK(quartic_form(rotated) == substitute(quartic_form(w), perm, sign));
        CHECK(vector_form(rotated) == substitute(vector_form(w), perm, sign));
    }
}

TEST_CASE("Schouten jets") {
    const auto w = random_weyl(8, 4);
    const auto jet = random_schouten_jet(w, 4);
    std::string why;
    CHECK_MESSAGE(check_jet(jet, &why), why);
    CHECK(laplacian(hess_form(jet)) == HomogeneousPoly::constant(8, -jet.w_norm_sq / 42));
    auto bad = jet;
    bad.hess[1][1] += 1;
    CHECK_FALSE(check_jet(bad));
}

TEST_CASE("brackets are harmonic") {
    for (int t = 0; t < 10; ++t) {
        const int n = 10 + t % 5;
        const auto w = random_weyl(n, 1000 + t);
        const auto jet = random_schouten_jet(w, 2000 + t);
        const auto b = bracket_polynomials(w, jet);
        CHECK(laplacian(b.bracket1).is_zero());
        CHECK(laplacian(b.harmonic2).is_zero());
        CHECK(laplacian(b.harmonic3).is_zero());
        CHECK(b.bracket2 == mul_r2(b.harmonic2));
        CHECK(b.tail == HomogeneousPoly::r_power(n, 2) * norm_sq(w));
    }
}

TEST_CASE("a jet with the wrong trace breaks bracket harmonicity") {
    const auto w = random_weyl(10, 3);
    auto jet = random_schouten_jet(w, 3);
    jet.hess[0][0] += 1;
    CHECK_THROWS_AS(bracket_polynomials(w, jet), InvariantViolation);
}

TEST_CASE("Bach quadratic") {
    const int n = 9;
    const auto zero = WeylTensor::from_function(n, [](int, int, int, int) -> Rational { return Rational(0); });
    CHECK(bach_quadratic(zero, zero_jet(n)).is_zero());

    const auto w = random_weyl(n, 12);
    const auto jet = random_schouten_jet(w, 12);
    // Laplacian chain from the quartic Schouten contraction.
    CHECK(bach_quadratic(w, jet) == laplacian_schouten_quadratic(w, jet) - hess_form(jet));
    const auto chain = laplacian_schouten_quadratic(w, jet);
    const auto display = vector_form(w) * make_rational(-2, 9 * (n - 2)) +
                         HomogeneousPoly::r_power(n, 1) * (norm_sq(w) / (12 * (n - 2) * (n - 1))) -
                         hess_form(jet) * make_rational(6 * (n - 1), n - 2);
    CHECK(chain == display);

    // Weyl scaling with zero Hessian: Bach part scales quadratically.
    const Rational lambda = make_rational(3, 2);
    const auto big = WeylTensor::from_function(n, [&](int i, int j, int k, int l) -> Rational { return w(i, j, k, l) * lambda; });
    SchoutenJet flat = zero_jet(n);
    flat.w_norm_sq = norm_sq(w);
    SchoutenJet flat_big = zero_jet(n);
    flat_big.w_norm_sq = norm_sq(big);
    CHECK(bach_quadratic(big, flat_big) == bach_quadratic(w, flat) * (lambda * lambda));
}

TEST_CASE("T4 quadratic matches its expanded form") {
    for (int n = 10; n <= 13; ++n) {
        const auto w = random_weyl(n, 40 + n);
        const auto jet = random_schouten_jet(w, 40 + n);
        const Rational w2 = norm_sq(w);
        const auto r2 = HomogeneousPoly::r_power(n, 1);
        const auto expanded = r2 * (-(n - 6) * w2 / (12 * (n - 1))) +
                              vector_form(w) * make_rational(32, 9 * (n - 4) * (n - 2)) -
                              r2 * (4 * w2 / (3 * (n - 4) * (n - 2) * (n - 1))) +
                              hess_form(jet) * make_rational(16 * (7 * n - 8), (n - 4) * (n - 2));
        CHECK(t4_quadratic(w, jet) == expanded);
    }
}
