#pragma once

#include <functional>
#include <vector>

namespace gjms6 {

/// Zonal function on S^n in the L^2-orthonormal zonal harmonic basis.
struct ZonalFunction {
    std::vector<double> a;
};

/// Gauss rule for integrals over S^n of zonal integrands, in t = cos(theta):
/// sum_q weights[q] g(nodes[q]) = omega_{n-1} int_{-1}^{1} g(t) (1-t^2)^{(n-2)/2} dt.
struct ZonalQuadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

ZonalQuadrature zonal_quadrature(int n, int points);

/// Number of nodes used when the caller does not ask for one: the env var
/// GJMS6_QUAD_POINTS if set, else `fallback`.
int default_quad_points(int fallback);

/// E_f[u] = 1/2 int u P u - 1/2# int f |u|^{2#} restricted to zonal functions of
/// degree <= ell_max, with f a function of t = cos(theta).
class ZonalProblem {
public:
    /// quad_points <= 0 picks a default; too few points for the integrand degree
    /// throws QuadratureUnderResolved.
    ZonalProblem(int n, int ell_max, std::function<double(double)> f, int quad_points = 0);

    int dim() const { return n_; }
    int ell_max() const { return ell_max_; }
    double critical_exponent() const { return p_; }
    const std::vector<double>& eigenvalues() const { return lambda_; }
    const ZonalQuadrature& quadrature() const { return quad_; }

    /// Profile u(t).
    double value(const ZonalFunction& u, double t) const;
    /// Basis function Y_ell at node q.
    double basis_at(int ell, std::size_t q) const { return y_[static_cast<std::size_t>(ell)][q]; }

    double energy(const ZonalFunction& u) const;
    ZonalFunction gradient(const ZonalFunction& u) const;
    std::vector<std::vector<double>> hessian(const ZonalFunction& u) const;

    /// 1/2 sum lambda a^2.
    double quadratic_energy(const ZonalFunction& u) const;
    /// int u P u with P applied to the profile as a differential operator in t.
    double quadratic_by_quadrature(const ZonalFunction& u) const;
    /// int f |u|^{2#}.
    double weighted_power_integral(const ZonalFunction& u) const;

    /// Constant function c in this basis.
    ZonalFunction constant(double c) const;

private:
    int n_;
    int ell_max_;
    double p_;
    std::function<double(double)> f_;
    ZonalQuadrature quad_;
    std::vector<double> lambda_;
    std::vector<std::vector<double>> y_;       // y_[ell][q]
    std::vector<std::vector<double>> power_;   // monomial coefficients of Y_ell in t
    std::vector<double> f_at_;
};

struct NewtonResult {
    ZonalFunction u;
    int iterations = 0;
    /// |grad E| / max(1, |lambda . a|).
    double residual = 0;
    std::vector<double> history;
};

/// Newton iteration with backtracking on |grad E|. Throws ConvergenceError when
/// the residual is above tol after max_iter steps or the Hessian is singular.
NewtonResult find_critical_point(const ZonalProblem& problem, const ZonalFunction& u0, double tol = 1e-10,
                                 int max_iter = 100);

/// (3/n) (int phi P phi / ||f^{1/2#} phi||_{2#}^2)^{n/6}.
double mountain_pass_level(const ZonalProblem& problem, const ZonalFunction& phi);
/// The Sobolev-type quotient inside the level.
double mountain_pass_quotient(const ZonalProblem& problem, const ZonalFunction& phi);
/// E_f along t phi / ||f^{1/2#} phi||_{2#}.
double path_energy(const ZonalProblem& problem, const ZonalFunction& phi, double t);

} // namespace gjms6
