#pragma once

#include <gjms6/dim_rational.hpp>
#include <gjms6/quadrature.hpp>

#include <vector>

namespace gjms6 {

/// u_eps(x) = (2 eps / (eps^2 + |x|^2))^{(n-6)/2} cut off at radius rho.
struct BubbleParams {
    int n = 10;
    double eps = 1e-3;
    double rho = 1.0;
    QuadSpec quad{};
};

struct BubbleProfile {
    double u = 0;
    double du = 0;
    double d2u = 0;
    double lap = 0;   // Delta_0 u
    double dlap = 0;  // (Delta_0 u)'
};

/// Closed forms; throws std::invalid_argument for r < 0 or n < 7.
BubbleProfile bubble_profile(const BubbleParams& p, double r);

/// omega_{n-1} int_0^inf ((Delta_0 u)')^2 r^{n-1} dr, by quadrature.
QuadratureResult sobolev_numerator(int n, double eps = 1.0, const QuadSpec& quad = {});
/// omega_{n-1} int_0^inf u^{2n/(n-6)} r^{n-1} dr, by quadrature.
QuadratureResult sobolev_denominator(int n, double eps = 1.0, const QuadSpec& quad = {});
/// The same two integrals through Beta functions (both are independent of eps).
double sobolev_numerator_closed(int n);
double sobolev_denominator_closed(int n);

/// numerator / denominator^{(n-6)/n} by quadrature.
double sobolev_quotient(int n, double eps = 1.0, const QuadSpec& quad = {});

/// B(n/2 + a/2, n/2 + b/2) through the exact ratio to B(n/2+1, n/2-5).
double beta_value(int n, int alpha_offset, int beta_offset);
/// int_0^inf t^{a-1} (1+t)^{-a-b} dt with t = sigma^2.
QuadratureResult beta_by_quadrature(double a, double b, const QuadSpec& quad = {});

/// The four sigma-integrals of the A-coefficient over (0, upper) and the brace
/// (n-2)/(4n) I1 + (n-6) I2 - I3 - (n^2-28)(n-4)/(n(n+2)) I4.
struct BraceIntegrals {
    QuadratureResult i1, i2, i3, i4;
    double brace = 0;
};
BraceIntegrals brace_integrals(int n, double upper, const QuadSpec& quad = {});
/// Combined brace integrand at sigma.
double brace_integrand(int n, double sigma);
/// (-36 s^6 - 46 s^4 + 220 s^2 + 50)(1+s^2)^{-8} s^9 / 5, the n = 10 brace integrand.
double n10_reduced_integrand(double sigma);

/// 2^{n-6} (n-6)^2/(12(n-1)) eps^4 * brace over (0, rho/eps). Throws
/// std::invalid_argument for n < 10.
double coefficient_A(const BubbleParams& p);

/// (-3n^5 + 18n^4 + 52n^3 - 200n^2 - 800n - 768) / (16 n (n+2)(n-3)).
DimRational limit_bracket();
Rational limit_bracket(int n);
/// The unreduced four-Beta combination of the limit, divided by B(n/2+1, n/2-5).
DimRational limit_beta_combination();

/// 2^{n-7} (n-6)^2/(12(n-1)) B(n/2+1, n/2-5) * bracket(n), the eps-free limit of
/// coefficient_A / eps^4. Throws std::invalid_argument for n < 11.
double coefficient_A_limit(int n);
/// Same limit by quadrature of the four t-integrals over (0, inf).
double coefficient_A_limit_quadrature(int n, const QuadSpec& quad = {});

struct LogDivergence {
    double slope = 0;
    double intercept = 0;
    double fit_residual = 0;
    std::vector<double> eps;
    std::vector<double> brace;
};

/// Fits the n = 10 brace over (0, rho/eps) against |log eps|. eps_grid must be
/// geometric and span at least three decades.
LogDivergence n10_log_divergence(double rho, const std::vector<double>& eps_grid, const QuadSpec& quad = {});
/// Exact large-sigma rate of the n = 10 brace: -36/5.
Rational n10_log_rate();

/// omega_{n-1} int_0^rho r^3 u_eps^2 / (eps^2 + r^2)^2 r^{n-1} dr.
QuadratureResult remainder_integral(int n, double eps, double rho = 1.0, const QuadSpec& quad = {});

struct ScalingVerdict {
    int n = 0;
    double predicted_exponent = 0;
    /// log-log slope of J(eps), or of J/|log eps| when log_corrected.
    double fitted_exponent = 0;
    bool log_corrected = false;
    /// For n = 11: fitted and exact coefficient of |log eps| in J / eps^5.
    double log_coefficient = 0;
    double expected_log_coefficient = 0;
    bool pass = false;
    std::vector<double> eps;
    std::vector<double> values;
};

/// Exponent of the remainder: 4 (n = 10), 5 with a log (n = 11), 5 (n >= 12),
/// accepted within 0.1.
ScalingVerdict remainder_scaling(int n, const std::vector<double>& eps_grid, double rho = 1.0, const QuadSpec& quad = {});

} // namespace gjms6
