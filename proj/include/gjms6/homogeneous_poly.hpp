#pragma once

#include <gjms6/rational.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gjms6 {

using Exponent = std::vector<std::uint8_t>;

/// Homogeneous polynomial of degree m in n variables with exact coefficients.
/// Only nonzero coefficients are stored.
class HomogeneousPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    /// The zero polynomial of degree 0 in one variable; a placeholder value.
    HomogeneousPoly() : n_(1), m_(0) {}
    HomogeneousPoly(int n, int m);

    static HomogeneousPoly constant(int n, const Rational& c);
    /// x_i (0-based index).
    static HomogeneousPoly variable(int n, int i);
    static HomogeneousPoly monomial(int n, const Exponent& e, const Rational& c = 1);
    /// r^{2k} = (x_1^2 + ... + x_n^2)^k.
    static HomogeneousPoly r_power(int n, int k);

    int dim() const { return n_; }
    int degree() const { return m_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Exponent& e) const;

    /// Adds c to the coefficient of x^e.
    void add_term(const Exponent& e, const Rational& c);

    HomogeneousPoly operator-() const;
    HomogeneousPoly& operator+=(const HomogeneousPoly& b);
    HomogeneousPoly& operator-=(const HomogeneousPoly& b);
    HomogeneousPoly& operator*=(const Rational& s);

    friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
    friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
    friend HomogeneousPoly operator*(HomogeneousPoly a, const Rational& s) { return a *= s; }
    friend HomogeneousPoly operator*(const Rational& s, HomogeneousPoly a) { return a *= s; }
    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
    friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        if (a.n_ != b.n_ || a.terms_ != b.terms_) return false;
        return a.m_ == b.m_ || a.terms_.empty();
    }
    friend bool operator!=(const HomogeneousPoly& a, const HomogeneousPoly& b) { return !(a == b); }

    std::string str() const;

private:
    int n_;
    int m_;
    Terms terms_;
};

HomogeneousPoly laplacian(const HomogeneousPoly& p);
HomogeneousPoly partial(const HomogeneousPoly& p, int i);
HomogeneousPoly mul_r2(const HomogeneousPoly& p);
HomogeneousPoly mul_r2k(const HomogeneousPoly& p, int k);
Rational evaluate(const HomogeneousPoly& p, const std::vector<Rational>& x);

/// p = sum_k r^{2k} h_k with h_k harmonic of degree m - 2k.
struct HarmonicDecomposition {
    int n = 0;
    int m = 0;
    std::vector<HomogeneousPoly> components;

    HomogeneousPoly reconstruct() const;
};

HarmonicDecomposition harmonic_decompose(const HomogeneousPoly& p);

/// Eigenvalue of the flat Laplacian on r^{2k} h, h harmonic of degree d:
/// Delta(r^{2k} h) = 2k(2d + n + 2k - 2) r^{2k-2} h.
Rational laplacian_layer_factor(int n, int d, int k);

} // namespace gjms6
