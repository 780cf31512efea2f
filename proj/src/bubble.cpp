#include <gjms6/bubble.hpp>
#include <gjms6/beta_ratio.hpp>
#include <gjms6/sphere_spectral.hpp>

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace gjms6 {

namespace {

const DimRational N = DimRational::n();

void require_dimension(int n, int lowest, const char* who) {
    if (n < lowest) throw std::invalid_argument(std::string(who) + ": n must be at least " + std::to_string(lowest));
}

double prefactor(int n) { return std::ldexp(1.0, n - 6) * (n - 6) * (n - 6) / (12.0 * (n - 1)); }

} // namespace

BubbleProfile bubble_profile(const BubbleParams& p, double r) {
    require_dimension(p.n, 7, "bubble_profile");
    if (r < 0) throw std::invalid_argument("bubble_profile: r must be non-negative");
    const double n = p.n, e2 = p.eps * p.eps, r2 = r * r, s = e2 + r2;
    BubbleProfile b;
    b.u = std::pow(2 * p.eps / s, (n - 6) / 2);
    b.du = -(n - 6) * b.u * r / s;
    b.d2u = -(n - 6) * b.u * (e2 - (n - 5) * r2) / (s * s);
    b.lap = -(n - 6) * b.u * (n * e2 + 4 * r2) / (s * s);
    b.dlap = (n - 6) * (n - 4) * b.u * r * ((n + 2) * e2 + 4 * r2) / (s * s * s);
    return b;
}

QuadratureResult sobolev_numerator(int n, double eps, const QuadSpec& quad) {
    const BubbleParams p{n, eps, kInfinity, quad};
    const double w = omega(n - 1);
    auto f = [&](double r) {
        const double d = bubble_profile(p, r).dlap;
        return w * d * d * std::pow(r, n - 1);
    };
    return integrate_radial(f, kInfinity, eps, quad);
}

QuadratureResult sobolev_denominator(int n, double eps, const QuadSpec& quad) {
    require_dimension(n, 7, "sobolev_denominator");
    const double w = omega(n - 1);
    auto f = [&](double r) { return w * std::pow(2 * eps / (eps * eps + r * r), n) * std::pow(r, n - 1); };
    return integrate_radial(f, kInfinity, eps, quad);
}

double sobolev_numerator_closed(int n) {
    require_dimension(n, 7, "sobolev_numerator_closed");
    const double sum = (n + 2.0) * (n + 2.0) * beta_value(n, 2, -2) + 8.0 * (n + 2) * beta_value(n, 4, -4) +
                       16.0 * beta_value(n, 6, -6);
    return omega(n - 1) * std::pow((n - 6.0) * (n - 4.0), 2) * std::ldexp(1.0, n - 7) * sum;
}

double sobolev_denominator_closed(int n) {
    require_dimension(n, 7, "sobolev_denominator_closed");
    return omega(n);
}

double sobolev_quotient(int n, double eps, const QuadSpec& quad) {
    const double num = sobolev_numerator(n, eps, quad).value;
    const double den = sobolev_denominator(n, eps, quad).value;
    return num / std::pow(den, (n - 6.0) / n);
}

double beta_value(int n, int alpha_offset, int beta_offset) {
    const double a = (n + alpha_offset) / 2.0, b = (n + beta_offset) / 2.0;
    if (!(a > 0 && b > 0)) throw std::invalid_argument("beta_value: arguments must be positive");
    const double a_ref = (n + kReferenceAlpha) / 2.0, b_ref = (n + kReferenceBeta) / 2.0;
    if (b_ref <= 0) return boost::math::beta(a, b);
    const Rational ratio = beta_relative(alpha_offset, beta_offset).relative_to_reference(n);
    return ratio.get_d() * boost::math::beta(a_ref, b_ref);
}

QuadratureResult beta_by_quadrature(double a, double b, const QuadSpec& quad) {
    if (!(a > 0 && b > 0)) throw std::invalid_argument("beta_by_quadrature: arguments must be positive");
    auto f = [&](double s) { return 2 * std::pow(s, 2 * a - 1) * std::pow(1 + s * s, -a - b); };
    return integrate_radial(f, kInfinity, 1.0, quad);
}

namespace {

double i1(int n, double s) {
    const double q = 1 + s * s, k = n + 4 * s * s;
    return k * k * std::pow(q, 2 - n) * std::pow(s, n + 1);
}
double i2(int n, double s) { return std::pow(1 + s * s, 4 - n) * std::pow(s, n + 1); }
double i3(int n, double s) {
    return std::pow(1 + s * s, 4 - n) * std::pow(s, n - 1) * ((n - 10) * s * s - n);
}
double i4(int n, double s) { return std::pow(s, n + 3) * std::pow(1 + s * s, 2 - n) * ((n + 2) + 4 * s * s); }

struct BraceWeights {
    double w1, w2, w3, w4;
};

BraceWeights brace_weights(int n) {
    const double d = n;
    return {(d - 2) / (4 * d), d - 6, -1.0, -(d * d - 28) * (d - 4) / (d * (d + 2))};
}

} // namespace

double brace_integrand(int n, double sigma) {
    const auto w = brace_weights(n);
    return w.w1 * i1(n, sigma) + w.w2 * i2(n, sigma) + w.w3 * i3(n, sigma) + w.w4 * i4(n, sigma);
}

double n10_reduced_integrand(double s) {
    const double s2 = s * s;
    return (-36 * s2 * s2 * s2 - 46 * s2 * s2 + 220 * s2 + 50) * std::pow(1 + s2, -8) * std::pow(s, 9) / 5;
}

BraceIntegrals brace_integrals(int n, double upper, const QuadSpec& quad) {
    require_dimension(n, 10, "brace_integrals");
    BraceIntegrals b;
    b.i1 = integrate_radial([n](double s) { return i1(n, s); }, upper, 1.0, quad);
    b.i2 = integrate_radial([n](double s) { return i2(n, s); }, upper, 1.0, quad);
    b.i3 = integrate_radial([n](double s) { return i3(n, s); }, upper, 1.0, quad);
    b.i4 = integrate_radial([n](double s) { return i4(n, s); }, upper, 1.0, quad);
    const auto w = brace_weights(n);
    b.brace = w.w1 * b.i1.value + w.w2 * b.i2.value + w.w3 * b.i3.value + w.w4 * b.i4.value;
    return b;
}

double coefficient_A(const BubbleParams& p) {
    require_dimension(p.n, 10, "coefficient_A");
    if (!(p.eps > 0 && p.rho > 0)) throw std::invalid_argument("coefficient_A: eps and rho must be positive");
    const double e2 = p.eps * p.eps;
    return prefactor(p.n) * e2 * e2 * brace_integrals(p.n, p.rho / p.eps, p.quad).brace;
}

DimRational limit_bracket() {
    return (-3 * pow(N, 5) + 18 * pow(N, 4) + 52 * pow(N, 3) - 200 * N * N - 800 * N - 768) /
           (16 * N * (N + 2) * (N - 3));
}

Rational limit_bracket(int n) { return limit_bracket()(n); }

DimRational limit_beta_combination() {
    const auto b = [](int a, int c) { return beta_relative(a, c).relative_to_reference; };
    const DimRational common = (N * N - 28) * (N - 4) / (N * (N + 2));
    return N * b(0, -8) + b(2, -6) * ((N - 2) * (N - 4) * (N - 4) / (4 * N) + common * (N - 2)) +
           b(2, -8) * (2 * (N - 2) * (N - 4) / N - common * (N - 6)) +
           (4 * (N - 2) / N - N + 10 + N - 6 - 4 * common);
}

double coefficient_A_limit(int n) {
    require_dimension(n, 11, "coefficient_A_limit");
    return prefactor(n) / 2 * beta_value(n, kReferenceAlpha, kReferenceBeta) * limit_bracket(n).get_d();
}

double coefficient_A_limit_quadrature(int n, const QuadSpec& quad) {
    require_dimension(n, 11, "coefficient_A_limit_quadrature");
    return prefactor(n) * brace_integrals(n, kInfinity, quad).brace;
}

LogDivergence n10_log_divergence(double rho, const std::vector<double>& eps_grid, const QuadSpec& quad) {
    if (eps_grid.size() < 3) throw std::invalid_argument("n10_log_divergence: need at least three grid points");
    double lo = eps_grid.front(), hi = eps_grid.front();
    for (double e : eps_grid) {
        if (!(e > 0)) throw std::invalid_argument("n10_log_divergence: eps must be positive");
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    const double step = std::log(eps_grid[1] / eps_grid[0]);
    for (std::size_t k = 1; k < eps_grid.size(); ++k) {
        if (std::abs(std::log(eps_grid[k] / eps_grid[k - 1]) - step) > 1e-9 * std::max(1.0, std::abs(step))) {
            throw std::invalid_argument("n10_log_divergence: eps grid is not geometric");
        }
    }
    if (hi / lo < 1e3 * (1 - 1e-12)) throw std::invalid_argument("n10_log_divergence: eps grid spans fewer than three decades");
    LogDivergence out;
    out.eps = eps_grid;
    std::vector<double> x;
    for (double e : eps_grid) {
        x.push_back(std::abs(std::log(e)));
        out.brace.push_back(brace_integrals(10, rho / e, quad).brace);
    }
    const auto fit = linear_fit(x, out.brace);
    out.slope = fit.slope;
    out.intercept = fit.intercept;
    out.fit_residual = fit.relative_residual;
    return out;
}

Rational n10_log_rate() { return make_rational(-36, 5); }

QuadratureResult remainder_integral(int n, double eps, double rho, const QuadSpec& quad) {
    require_dimension(n, 7, "remainder_integral");
    const BubbleParams p{n, eps, rho, quad};
    const double w = omega(n - 1);
    auto f = [&](double r) {
        const double u = bubble_profile(p, r).u, s = eps * eps + r * r;
        return w * std::pow(r, n + 2) * u * u / (s * s);
    };
    return integrate_radial(f, rho, eps, quad);
}

ScalingVerdict remainder_scaling(int n, const std::vector<double>& eps_grid, double rho, const QuadSpec& quad) {
    require_dimension(n, 10, "remainder_scaling");
    ScalingVerdict v;
    v.n = n;
    v.predicted_exponent = n == 10 ? 4 : 5;
    v.log_corrected = n == 11;
    v.eps = eps_grid;
    std::vector<double> x, y;
    for (double e : eps_grid) {
        const double j = remainder_integral(n, e, rho, quad).value;
        v.values.push_back(j);
        x.push_back(std::log(e));
        y.push_back(v.log_corrected ? std::log(j / std::abs(std::log(e))) : std::log(j));
    }
    v.fitted_exponent = linear_fit(x, y).slope;
    v.pass = std::abs(v.fitted_exponent - v.predicted_exponent) <= 0.1;
    if (v.log_corrected) {
        std::vector<double> l, z;
        for (std::size_t k = 0; k < eps_grid.size(); ++k) {
            l.push_back(std::abs(std::log(eps_grid[k])));
            z.push_back(v.values[k] / std::pow(eps_grid[k], 5));
        }
        v.log_coefficient = linear_fit(l, z).slope;
        // sigma^{n+2} (1+sigma^2)^{4-n} ~ 1/sigma at n = 11
        v.expected_log_coefficient = omega(n - 1) * std::ldexp(1.0, n - 6);
        v.pass = v.pass && std::abs(v.log_coefficient / v.expected_log_coefficient - 1) <= 1e-2;
    }
    return v;
}

} // namespace gjms6
