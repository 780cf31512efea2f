#pragma once

#include <gjms6/dim_rational.hpp>

#include <array>
#include <string>
#include <vector>

namespace gjms6 {

/// -P = Delta^3 + a Delta^2 + b Delta + c on an Einstein manifold with scalar
/// curvature R (a function of n; the round sphere has R = n(n-1)).
struct EinsteinOperator {
    DimRational R;
    DimRational a, b, c;
    /// Q-curvature; c = -(n-6)/2 * Q.
    DimRational q;
};

EinsteinOperator einstein_operator(const DimRational& R);
EinsteinOperator sphere_operator();

/// Q-curvature of the round sphere, n(n^4 - 20n^2 + 64)/32.
DimRational q_sphere();
/// Q / R^3 on an Einstein manifold.
DimRational q_einstein();
/// Factor constants on the round sphere: (n-6)(n+4)/4, (n-4)(n+2)/4, n(n-2)/4.
std::array<DimRational, 3> factor_constants();
/// The same constants per unit R, i.e. divided by n(n-1).
std::array<DimRational, 3> einstein_factor_constants();

struct CoefficientCheck {
    std::string name;
    DimRational expected;
    DimRational computed;
    bool match = false;
};

struct FactorizationCheck {
    bool ok = false;
    std::vector<CoefficientCheck> coefficients;
};

/// Expands the product of the three factors in powers of Delta and compares
/// each coefficient with the Einstein cubic. `perturb` is added to the first
/// factor constant (negative control).
FactorizationCheck verify_factorization(const DimRational& perturb = DimRational(0));
/// Checks that the general order-2k product at k = 3 reproduces the three
/// factor constants.
FactorizationCheck verify_general_product(int k = 3);

struct SphereSpectrum {
    int n = 0;
    std::array<Rational, 3> c;
    std::vector<Rational> eigenvalues;
    std::vector<Integer> multiplicities;
};

/// lambda_l = prod_i (l(l+n-1) + c_i) for l = 0..ell_max.
SphereSpectrum sphere_spectrum(int n, int ell_max);
Integer harmonic_multiplicity(int n, int ell);

/// Volume of the unit sphere S^n.
double omega(int n);
/// (n-6)/2 Q_{S^n} omega_n^{6/n}.
double y6_sphere(int n);

} // namespace gjms6
