#include <doctest.h>

#include <gjms6/errors.hpp>
#include <gjms6/sphere_spectral.hpp>
#include <gjms6/zonal_galerkin.hpp>

#include <cmath>
#include <random>

using namespace gjms6;

namespace {

ZonalFunction random_zonal(std::mt19937_64& rng, int ell_max, double base) {
    std::uniform_real_distribution<double> d(-0.2, 0.2);
    ZonalFunction u{std::vector<double>(static_cast<std::size_t>(ell_max + 1))};
    for (auto& v : u.a) v = d(rng);
    u.a[0] += base;
    return u;
}

} // namespace

TEST_CASE("zonal quadrature integrates the sphere measure") {
    for (int n : {2, 7, 10, 13}) {
        const auto q = zonal_quadrature(n, 20);
        double total = 0, second = 0;
        for (std::size_t k = 0; k < q.nodes.size(); ++k) {
            total += q.weights[k];
            second += q.weights[k] * q.nodes[k] * q.nodes[k];
        }
        CHECK(total == doctest::Approx(omega(n)).epsilon(1e-13));
        // The mean of t^2 over S^n is 1/(n+1).
        CHECK(second == doctest::Approx(omega(n) / (n + 1)).epsilon(1e-13));
    }
}

TEST_CASE("basis is orthonormal") {
    const ZonalProblem pr(10, 8, [](double) { return 1.0; });
    const auto& q = pr.quadrature();
    for (int l = 0; l <= 8; ++l)
        for (int k = 0; k <= 8; ++k) {
            double s = 0;
            for (std::size_t j = 0; j < q.nodes.size(); ++j) s += q.weights[j] * pr.basis_at(l, j) * pr.basis_at(k, j);
            CHECK(s == doctest::Approx(l == k ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
        }
}

TEST_CASE("spectral and differential quadratic forms agree") {
    std::mt19937_64 rng(6);
    for (int n : {7, 10, 12}) {
        const ZonalProblem pr(n, 8, [](double) { return 1.0; });
        for (int t = 0; t < 5; ++t) {
            const auto u = random_zonal(rng, 8, 1.0);
            CHECK(pr.quadratic_by_quadrature(u) == doctest::Approx(2 * pr.quadratic_energy(u)).epsilon(1e-9));
        }
    }
}

TEST_CASE("single-mode energy closed form") {
    const int n = 10;
    const double f = 3.0;
    const ZonalProblem pr(n, 4, [=](double) { return f; });
    const double c = 0.7;
    const auto u = pr.constant(c);
    const double p = 2.0 * n / (n - 6);
    const double want = 0.5 * 5040 * c * c * omega(n) - f / p * std::pow(c, p) * omega(n);
    CHECK(pr.energy(u) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("constant solution is critical") {
    const int n = 10;
    const ZonalProblem pr(n, 8, [](double) { return 5040.0; });
    const auto g = pr.gradient(pr.constant(1.0));
    for (double v : g.a) CHECK(std::abs(v) < 1e-9);
}

TEST_CASE("analytic gradient against central differences") {
    std::mt19937_64 rng(12);
    const ZonalProblem pr(10, 8, [](double t) { return 5040.0 * (1 + 0.1 * t * t); });
    for (int trial = 0; trial < 3; ++trial) {
        const auto u = random_zonal(rng, 8, 1.0);
        const auto g = pr.gradient(u);
        for (std::size_t l = 0; l < u.a.size(); ++l) {
            const double h = 1e-5;
            auto up = u, dn = u;
            up.a[l] += h;
            dn.a[l] -= h;
            const double fd = (pr.energy(up) - pr.energy(dn)) / (2 * h);
            CHECK(std::abs(fd - g.a[l]) <= 1e-6 * std::max(1.0, std::abs(g.a[l])) + 1e-6 * std::abs(pr.energy(u)));
        }
    }
}

TEST_CASE("Newton converges to the constant solution from a small even perturbation") {
    // Odd modes include the conformal null direction l = 1, so the perturbation
    // is kept even in t.
    const int n = 10;
    const ZonalProblem pr(n, 8, [](double) { return 5040.0; });
    const auto one = pr.constant(1.0);
    auto u0 = one;
    for (std::size_t l = 0; l < u0.a.size(); l += 2) u0.a[l] += 0.01 * one.a[0] / (1.0 + l);
    const auto res = find_critical_point(pr, u0, 1e-10);
    CHECK(res.residual <= 1e-10);
    for (std::size_t l = 0; l < one.a.size(); ++l) CHECK(std::abs(res.u.a[l] - one.a[l]) < 1e-8);
}

TEST_CASE("a generic perturbation converges along the conformal orbit") {
    const int n = 10;
    const ZonalProblem pr(n, 8, [](double) { return 5040.0; });
    const auto one = pr.constant(1.0);
    auto u0 = one;
    for (std::size_t l = 0; l < u0.a.size(); ++l) u0.a[l] += 0.01 * one.a[0] * (l % 2 == 0 ? 1 : -1) / (1.0 + l);
    const auto res = find_critical_point(pr, u0, 1e-10);
    CHECK(res.residual <= 1e-10);
    CHECK(pr.energy(res.u) == doctest::Approx(pr.energy(one)).epsilon(1e-9));
}

TEST_CASE("mountain-pass level") {
    const int n = 10;
    const double f = 2.5;
    const ZonalProblem pr(n, 6, [=](double) { return f; });
    const auto phi = pr.constant(1.3);
    const double want = 3.0 / n * std::pow(y6_sphere(n), n / 6.0) * std::pow(f, (6.0 - n) / 6.0);
    CHECK(mountain_pass_level(pr, phi) == doctest::Approx(want).epsilon(1e-12));
    auto scaled = phi;
    for (auto& v : scaled.a) v *= 4.0;
    CHECK(mountain_pass_level(pr, scaled) == doctest::Approx(mountain_pass_level(pr, phi)).epsilon(1e-12));

    // One-dimensional profile 1/2 t^2 q - t^{2#}/2# with maximizer t* = q^{1/(2#-2)}.
    std::mt19937_64 rng(2);
    const auto psi = random_zonal(rng, 6, 1.0);
    const double q = mountain_pass_quotient(pr, psi);
    const double p = pr.critical_exponent();
    for (double t : {0.3, 1.0, 2.0}) {
        CHECK(path_energy(pr, psi, t) == doctest::Approx(0.5 * t * t * q - std::pow(t, p) / p).epsilon(1e-10));
    }
    const double tstar = std::pow(q, 1.0 / (p - 2));
    const double h = 1e-4 * tstar;
    const double slope = (path_energy(pr, psi, tstar + h) - path_energy(pr, psi, tstar - h)) / (2 * h);
    CHECK(std::abs(slope) <= 1e-6 * path_energy(pr, psi, tstar));
    CHECK(path_energy(pr, psi, tstar) == doctest::Approx(3.0 / n * std::pow(q, n / 6.0)).epsilon(1e-10));
}

TEST_CASE("quadrature guard") {
    CHECK_THROWS_AS(ZonalProblem(10, 8, [](double) { return 1.0; }, 5), QuadratureUnderResolved);
    CHECK_THROWS_AS(ZonalProblem(6, 8, [](double) { return 1.0; }), std::invalid_argument);
}
