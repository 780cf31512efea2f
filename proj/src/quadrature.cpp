#include <gjms6/quadrature.hpp>
#include <gjms6/errors.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gjms6 {

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadSpec& spec) {
    QuadratureResult out;
    if (a == b) return out;
    long evaluations = 0;
    // Boost compares an unscaled panel error against a scaled tolerance, so the
    // interval is always presented as [-1, 1].
    const double mid = (a + b) / 2, half = (b - a) / 2;
    auto counted = [&](double x) {
        ++evaluations;
        return half * f(mid + half * x);
    };
    double error = 0;
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    out.value = GK::integrate(counted, -1.0, 1.0, spec.max_depth, spec.rel_tol, &error);
    out.abs_error_estimate = error;
    out.subdivisions = static_cast<int>(evaluations / 15);
    if (!std::isfinite(out.value) || error > spec.fail_tol * std::max(std::abs(out.value), 1e-300)) {
        std::ostringstream os;
        os << "quadrature on [" << a << ", " << b << "] did not converge: value " << out.value << ", error " << error;
        throw ConvergenceError(os.str());
    }
    return out;
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a, const QuadSpec& spec) {
    auto mapped = [&](double t) {
        if (t >= 1) return 0.0;
        const double s = 1 - t;
        const double v = f(a + t / s);
        return v == 0 ? 0.0 : v / (s * s);
    };
    return integrate(mapped, 0, 1, spec);
}

QuadratureResult integrate_radial(const Integrand& f, double upper, double scale, const QuadSpec& spec) {
    if (!(upper > 0)) throw std::invalid_argument("integrate_radial: upper limit must be positive");
    const double cut = spec.split * scale;
    if (upper <= cut) return integrate(f, 0, upper, spec);
    QuadratureResult out = integrate(f, 0, cut, spec);
    if (std::isinf(upper)) {
        out += integrate_to_infinity(f, cut, spec);
    } else {
        auto in_log = [&](double y) {
            const double r = std::exp(y);
            return f(r) * r;
        };
        out += integrate(in_log, std::log(cut), std::log(upper), spec);
    }
    return out;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear_fit: need at least two paired points");
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    if (sxx == 0) throw std::invalid_argument("linear_fit: abscissae are all equal");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double worst = 0, scale = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        worst = std::max(worst, std::abs(y[k] - (fit.slope * x[k] + fit.intercept)));
        scale = std::max(scale, std::abs(y[k]));
    }
    fit.relative_residual = scale == 0 ? worst : worst / scale;
    return fit;
}

std::vector<double> geometric_grid(double from, double to, int points) {
    if (points < 2 || !(from > 0) || !(to > 0)) throw std::invalid_argument("geometric_grid: need two or more positive points");
    std::vector<double> out(static_cast<std::size_t>(points));
    const double a = std::log(from), b = std::log(to);
    for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = std::exp(a + (b - a) * k / (points - 1));
    return out;
}

} // namespace gjms6
