#include <gjms6/zonal_galerkin.hpp>
#include <gjms6/errors.hpp>
#include <gjms6/sphere_spectral.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gjms6 {

namespace {

using Poly = std::vector<double>;  // power basis in t, low to high

double horner(const Poly& p, double t) {
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {0.0};
    Poly d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
    return d;
}

// (-Delta_{S^n} + c) on a zonal profile: -(1-t^2) u'' + n t u' + c u.
Poly shifted_laplacian(const Poly& u, int n, double c) {
    const Poly d1 = derivative(u);
    const Poly d2 = derivative(d1);
    Poly out(u.size() + 1, 0.0);
    for (std::size_t k = 0; k < d2.size(); ++k) {
        out[k] -= d2[k];
        out[k + 2] += d2[k];
    }
    for (std::size_t k = 0; k < d1.size(); ++k) out[k + 1] += n * d1[k];
    for (std::size_t k = 0; k < u.size(); ++k) out[k] += c * u[k];
    return out;
}

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace

ZonalQuadrature zonal_quadrature(int n, int points) {
    if (n < 2) throw std::invalid_argument("zonal_quadrature: n must be at least 2");
    if (points < 1) throw std::invalid_argument("zonal_quadrature: need at least one node");
    // Golub-Welsch for the symmetric Jacobi weight (1-t^2)^a.
    const double a = 0.5 * (n - 2);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(points, points);
    for (int k = 1; k < points; ++k) {
        const double b = std::sqrt(k * (k + 2 * a) / ((2 * k + 2 * a + 1) * (2 * k + 2 * a - 1)));
        jac(k, k - 1) = jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jac);
    const double mu0 = std::exp((2 * a + 1) * std::log(2.0) + 2 * std::lgamma(a + 1) - std::lgamma(2 * a + 2));
    const double shell = omega(n - 1);
    ZonalQuadrature q;
    for (int k = 0; k < points; ++k) {
        q.nodes.push_back(eig.eigenvalues()(k));
        const double v0 = eig.eigenvectors()(0, k);
        q.weights.push_back(shell * mu0 * v0 * v0);
    }
    return q;
}

int default_quad_points(int fallback) {
    if (const char* env = std::getenv("GJMS6_QUAD_POINTS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
    }
    return fallback;
}

ZonalProblem::ZonalProblem(int n, int ell_max, std::function<double(double)> f, int quad_points)
    : n_(n), ell_max_(ell_max), p_(2.0 * n / (n - 6)), f_(std::move(f)) {
    if (n < 7) throw std::invalid_argument("ZonalProblem: n must be at least 7");
    if (ell_max < 0) throw std::invalid_argument("ZonalProblem: negative ell_max");
    // Nodes needed to integrate f |u|^{2#-2} Y Y for a polynomial-like f of
    // degree zero.
    const int needed = static_cast<int>(std::ceil((p_ * ell_max + 2) / 2.0));
    if (quad_points <= 0) quad_points = default_quad_points(std::max(96, 2 * needed));
    if (quad_points < needed) {
        throw QuadratureUnderResolved("ZonalProblem: " + std::to_string(quad_points) + " nodes, at least " +
                                      std::to_string(needed) + " needed for ell_max=" + std::to_string(ell_max));
    }
    quad_ = zonal_quadrature(n, quad_points);

    const auto spec = sphere_spectrum(n, ell_max);
    for (const auto& l : spec.eigenvalues) lambda_.push_back(l.get_d());

    // Gegenbauer C^{(n-1)/2}_ell in the power basis, then L^2-normalized.
    const double g = 0.5 * (n - 1);
    std::vector<Poly> c;
    c.push_back({1.0});
    if (ell_max >= 1) c.push_back({0.0, 2 * g});
    for (int l = 2; l <= ell_max; ++l) {
        Poly next(static_cast<std::size_t>(l + 1), 0.0);
        const Poly& p1 = c[static_cast<std::size_t>(l - 1)];
        const Poly& p2 = c[static_cast<std::size_t>(l - 2)];
        for (std::size_t k = 0; k < p1.size(); ++k) next[k + 1] += 2 * (l + g - 1) * p1[k] / l;
        for (std::size_t k = 0; k < p2.size(); ++k) next[k] -= (l + 2 * g - 2) * p2[k] / l;
        c.push_back(next);
    }
    const std::size_t nq = quad_.nodes.size();
    for (int l = 0; l <= ell_max; ++l) {
        Poly p = c[static_cast<std::size_t>(l)];
        std::vector<double> vals(nq);
        double nrm = 0;
        for (std::size_t q = 0; q < nq; ++q) {
            vals[q] = horner(p, quad_.nodes[q]);
            nrm += quad_.weights[q] * vals[q] * vals[q];
        }
        const double s = 1.0 / std::sqrt(nrm);
        for (auto& v : vals) v *= s;
        for (auto& v : p) v *= s;
        y_.push_back(vals);
        power_.push_back(p);
    }
    for (double t : quad_.nodes) f_at_.push_back(f_(t));
}

double ZonalProblem::value(const ZonalFunction& u, double t) const {
    double acc = 0;
    for (std::size_t l = 0; l < u.a.size() && l < power_.size(); ++l) acc += u.a[l] * horner(power_[l], t);
    return acc;
}

ZonalFunction ZonalProblem::constant(double c) const {
    ZonalFunction u{std::vector<double>(static_cast<std::size_t>(ell_max_ + 1), 0.0)};
    u.a[0] = c / y_[0][0];
    return u;
}

double ZonalProblem::quadratic_energy(const ZonalFunction& u) const {
    double s = 0;
    for (std::size_t l = 0; l < u.a.size(); ++l) s += lambda_[l] * u.a[l] * u.a[l];
    return 0.5 * s;
}

double ZonalProblem::quadratic_by_quadrature(const ZonalFunction& u) const {
    Poly prof(static_cast<std::size_t>(ell_max_ + 1), 0.0);
    for (std::size_t l = 0; l < u.a.size(); ++l)
        for (std::size_t k = 0; k < power_[l].size(); ++k) prof[k] += u.a[l] * power_[l][k];
    Poly pu = prof;
    const auto spec = sphere_spectrum(n_, 0);
    for (const auto& c : spec.c) pu = shifted_laplacian(pu, n_, c.get_d());
    double s = 0;
    for (std::size_t q = 0; q < quad_.nodes.size(); ++q) {
        s += quad_.weights[q] * horner(prof, quad_.nodes[q]) * horner(pu, quad_.nodes[q]);
    }
    return s;
}

double ZonalProblem::weighted_power_integral(const ZonalFunction& u) const {
    double s = 0;
    for (std::size_t q = 0; q < quad_.nodes.size(); ++q) {
        double v = 0;
        for (std::size_t l = 0; l < u.a.size(); ++l) v += u.a[l] * y_[l][q];
        s += quad_.weights[q] * f_at_[q] * std::pow(std::abs(v), p_);
    }
    return s;
}

double ZonalProblem::energy(const ZonalFunction& u) const {
    return quadratic_energy(u) - weighted_power_integral(u) / p_;
}

ZonalFunction ZonalProblem::gradient(const ZonalFunction& u) const {
    ZonalFunction g{std::vector<double>(u.a.size(), 0.0)};
    for (std::size_t l = 0; l < u.a.size(); ++l) g.a[l] = lambda_[l] * u.a[l];
    for (std::size_t q = 0; q < quad_.nodes.size(); ++q) {
        double v = 0;
        for (std::size_t l = 0; l < u.a.size(); ++l) v += u.a[l] * y_[l][q];
        const double s = quad_.weights[q] * f_at_[q] * std::pow(std::abs(v), p_ - 2) * v;
        for (std::size_t l = 0; l < u.a.size(); ++l) g.a[l] -= s * y_[l][q];
    }
    return g;
}

std::vector<std::vector<double>> ZonalProblem::hessian(const ZonalFunction& u) const {
    const std::size_t m = u.a.size();
    std::vector<std::vector<double>> h(m, std::vector<double>(m, 0.0));
    for (std::size_t l = 0; l < m; ++l) h[l][l] = lambda_[l];
    for (std::size_t q = 0; q < quad_.nodes.size(); ++q) {
        double v = 0;
        for (std::size_t l = 0; l < m; ++l) v += u.a[l] * y_[l][q];
        const double s = (p_ - 1) * quad_.weights[q] * f_at_[q] * std::pow(std::abs(v), p_ - 2);
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t k = 0; k < m; ++k) h[l][k] -= s * y_[l][q] * y_[k][q];
    }
    return h;
}

NewtonResult find_critical_point(const ZonalProblem& problem, const ZonalFunction& u0, double tol, int max_iter) {
    const std::size_t m = static_cast<std::size_t>(problem.ell_max() + 1);
    if (u0.a.size() != m) throw std::invalid_argument("find_critical_point: initial guess has the wrong length");
    const auto& lam = problem.eigenvalues();
    auto residual = [&](const ZonalFunction& u, const ZonalFunction& g) {
        std::vector<double> scaled(m);
        for (std::size_t l = 0; l < m; ++l) scaled[l] = lam[l] * u.a[l];
        return norm2(g.a) / std::max(1.0, norm2(scaled));
    };
    NewtonResult out{u0, 0, 0, {}};
    ZonalFunction g = problem.gradient(out.u);
    out.residual = residual(out.u, g);
    out.history.push_back(out.residual);
    while (out.residual > tol) {
        if (out.iterations >= max_iter) {
            throw ConvergenceError("find_critical_point: residual " + std::to_string(out.residual) + " after " +
                                   std::to_string(max_iter) + " iterations");
        }
        const auto h = problem.hessian(out.u);
        Eigen::MatrixXd hm(m, m);
        Eigen::VectorXd rhs(m);
        for (std::size_t l = 0; l < m; ++l) {
            rhs(static_cast<Eigen::Index>(l)) = -g.a[l];
            for (std::size_t k = 0; k < m; ++k) hm(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(k)) = h[l][k];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(hm);
        if (!lu.isInvertible()) throw ConvergenceError("find_critical_point: singular Hessian");
        const Eigen::VectorXd step = lu.solve(rhs);
        const double gnorm = norm2(g.a);
        double t = 1.0;
        ZonalFunction trial = out.u;
        ZonalFunction gt;
        for (;;) {
            for (std::size_t l = 0; l < m; ++l) trial.a[l] = out.u.a[l] + t * step(static_cast<Eigen::Index>(l));
            gt = problem.gradient(trial);
            if (norm2(gt.a) <= (1 - 1e-4 * t) * gnorm || t < 1e-10) break;
            t *= 0.5;
        }
        if (!(norm2(gt.a) < gnorm)) throw ConvergenceError("find_critical_point: line search made no progress");
        out.u = trial;
        g = gt;
        ++out.iterations;
        out.residual = residual(out.u, g);
        out.history.push_back(out.residual);
    }
    return out;
}

double mountain_pass_quotient(const ZonalProblem& problem, const ZonalFunction& phi) {
    const double top = 2 * problem.quadratic_energy(phi);
    const double bottom = std::pow(problem.weighted_power_integral(phi), 2.0 / problem.critical_exponent());
    return top / bottom;
}

double mountain_pass_level(const ZonalProblem& problem, const ZonalFunction& phi) {
    const int n = problem.dim();
    return 3.0 / n * std::pow(mountain_pass_quotient(problem, phi), n / 6.0);
}

double path_energy(const ZonalProblem& problem, const ZonalFunction& phi, double t) {
    const double nrm = std::pow(problem.weighted_power_integral(phi), 1.0 / problem.critical_exponent());
    ZonalFunction u = phi;
    for (auto& v : u.a) v *= t / nrm;
    return problem.energy(u);
}

} // namespace gjms6
