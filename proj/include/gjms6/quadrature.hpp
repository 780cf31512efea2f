#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace gjms6 {

struct QuadratureResult {
    double value = 0;
    double abs_error_estimate = 0;
    /// Number of 15-point Kronrod panels evaluated.
    int subdivisions = 0;

    QuadratureResult& operator+=(const QuadratureResult& b) {
        value += b.value;
        abs_error_estimate += b.abs_error_estimate;
        subdivisions += b.subdivisions;
        return *this;
    }
};

struct QuadSpec {
    /// Requested relative accuracy per panel.
    double rel_tol = 1e-13;
    unsigned max_depth = 18;
    /// Radius separating the core [0, split] from the tail, in units of the
    /// integrand's natural scale.
    double split = 1.0;
    /// Relative error estimate above which the result is rejected.
    double fail_tol = 1e-8;
};

using Integrand = std::function<double(double)>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Adaptive Gauss-Kronrod on a finite interval. Throws ConvergenceError when
/// the error estimate exceeds spec.fail_tol relative to the value.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadSpec& spec = {});

/// Integral over [a, infinity) through x = a + t/(1-t).
QuadratureResult integrate_to_infinity(const Integrand& f, double a, const QuadSpec& spec = {});

/// Integral over [0, upper] of a function peaked near `scale` with a power-law
/// tail: the core [0, split*scale] directly, the rest in log r (finite upper)
/// or through the t/(1-t) map (upper = kInfinity).
QuadratureResult integrate_radial(const Integrand& f, double upper, double scale = 1.0, const QuadSpec& spec = {});

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    /// max |y - fit| / max |y|
    double relative_residual = 0;
};

/// Ordinary least squares y = slope x + intercept.
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// n points from `from` to `to`, evenly spaced in log.
std::vector<double> geometric_grid(double from, double to, int points);

} // namespace gjms6
