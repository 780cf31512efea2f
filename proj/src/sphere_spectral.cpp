#include <gjms6/sphere_spectral.hpp>

#include <cmath>
#include <stdexcept>

namespace gjms6 {

namespace {

const DimRational N = DimRational::n();

using DeltaPoly = UPoly<DimRational>;

CoefficientCheck compare(std::string name, const DimRational& expected, const DimRational& computed) {
    return {std::move(name), expected, computed, expected == computed};
}

} // namespace

DimRational q_einstein() { return (pow(N, 4) - 20 * pow(N, 2) + 64) / (32 * pow(N, 2) * pow(N - 1, 3)); }

DimRational q_sphere() { return N * (pow(N, 4) - 20 * pow(N, 2) + 64) / 32; }

EinsteinOperator einstein_operator(const DimRational& R) {
    EinsteinOperator op;
    op.R = R;
    op.a = (-3 * N * N + 6 * N + 32) / (4 * N * (N - 1)) * R;
    op.b = (3 * pow(N, 4) - 12 * pow(N, 3) - 52 * pow(N, 2) + 128 * N + 192) / (16 * N * N * pow(N - 1, 2)) * R * R;
    op.q = q_einstein() * R * R * R;
    op.c = -(N - 6) / 2 * op.q;
    return op;
}

EinsteinOperator sphere_operator() { return einstein_operator(N * (N - 1)); }

std::array<DimRational, 3> factor_constants() {
    return {(N - 6) * (N + 4) / 4, (N - 4) * (N + 2) / 4, N * (N - 2) / 4};
}

std::array<DimRational, 3> einstein_factor_constants() {
    auto c = factor_constants();
    for (auto& v : c) v /= N * (N - 1);
    return c;
}

FactorizationCheck verify_factorization(const DimRational& perturb) {
    auto c = einstein_factor_constants();
    c[0] += perturb;
    // P as a polynomial in Delta (R = 1): prod_i (-Delta + c_i).
    DeltaPoly p(DimRational(1));
    for (const auto& ci : c) p *= DeltaPoly(std::vector<DimRational>{ci, DimRational(-1)});
    const auto op = einstein_operator(DimRational(1));
    // -P = Delta^3 + a Delta^2 + b Delta + c.
    FactorizationCheck out;
    out.coefficients.push_back(compare("Delta^3", DimRational(-1), p.coeff(3)));
    out.coefficients.push_back(compare("Delta^2", -op.a, p.coeff(2)));
    out.coefficients.push_back(compare("Delta^1", -op.b, p.coeff(1)));
    out.coefficients.push_back(compare("Delta^0", -op.c, p.coeff(0)));
    auto sphere_c = factor_constants();
    sphere_c[0] += perturb * N * (N - 1);
    out.coefficients.push_back(compare("lambda_0", (N - 6) / 2 * q_sphere(), sphere_c[0] * sphere_c[1] * sphere_c[2]));
    out.ok = true;
    for (const auto& cc : out.coefficients) out.ok = out.ok && cc.match;
    return out;
}

FactorizationCheck verify_general_product(int k) {
    if (k != 3) throw std::invalid_argument("verify_general_product: only k = 3 is tied to the sixth-order operator");
    const auto c = einstein_factor_constants();
    FactorizationCheck out;
    for (int i = 1; i <= k; ++i) {
        const DimRational term = (N + 2 * i - 2) * (N - 2 * i) / (4 * N * (N - 1));
        out.coefficients.push_back(compare("factor i=" + std::to_string(i), c[static_cast<std::size_t>(k - i)], term));
    }
    out.ok = true;
    for (const auto& cc : out.coefficients) out.ok = out.ok && cc.match;
    return out;
}

Integer harmonic_multiplicity(int n, int ell) {
    Integer a, b;
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(ell + n), static_cast<unsigned long>(n));
    if (ell >= 2) mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(ell + n - 2), static_cast<unsigned long>(n));
    else b = 0;
    return a - b;
}

SphereSpectrum sphere_spectrum(int n, int ell_max) {
    if (n < 2) throw std::invalid_argument("sphere_spectrum: n must be at least 2");
    if (ell_max < 0) throw std::invalid_argument("sphere_spectrum: negative ell_max");
    SphereSpectrum s;
    s.n = n;
    const auto fc = factor_constants();
    for (std::size_t i = 0; i < 3; ++i) s.c[i] = fc[i](n);
    for (int ell = 0; ell <= ell_max; ++ell) {
        const Rational lap = Rational(ell) * (ell + n - 1);
        Rational lam = 1;
        for (const auto& ci : s.c) lam *= lap + ci;
        s.eigenvalues.push_back(lam);
        s.multiplicities.push_back(harmonic_multiplicity(n, ell));
    }
    return s;
}

double omega(int n) {
    const double h = 0.5 * (n + 1);
    return 2.0 * std::exp(h * std::log(M_PI) - std::lgamma(h));
}

double y6_sphere(int n) {
    const double lambda0 = ((N - 6) / 2 * q_sphere())(n).get_d();
    return lambda0 * std::pow(omega(n), 6.0 / n);
}

} // namespace gjms6
