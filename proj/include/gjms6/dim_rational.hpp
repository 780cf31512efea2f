#pragma once

#include <gjms6/rational.hpp>
#include <gjms6/upoly.hpp>

#include <initializer_list>
#include <iosfwd>
#include <string>

namespace gjms6 {

using RatPoly = UPoly<Rational>;

/// A rational function of the dimension symbol n with rational coefficients.
///
/// Canonical form: the denominator is monic and coprime to the numerator, so
/// two values are equal exactly when their stored polynomials are equal.
class DimRational {
public:
    DimRational() : den_(Rational(1)) {}
    DimRational(int c) : num_(Rational(c)), den_(Rational(1)) {}
    DimRational(const Rational& c) : num_(c), den_(Rational(1)) {}
    DimRational(RatPoly num, RatPoly den);

    /// The symbol n itself.
    static DimRational n();
    static DimRational poly(std::initializer_list<long> coeffs_low_to_high);

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Exact substitution of an integer (or rational) dimension.
    /// Throws PoleError when the denominator vanishes there.
    Rational eval(const Rational& at) const;
    Rational operator()(long at) const { return eval(Rational(at)); }

    DimRational operator-() const;
    friend DimRational operator+(const DimRational& a, const DimRational& b);
    friend DimRational operator-(const DimRational& a, const DimRational& b);
    friend DimRational operator*(const DimRational& a, const DimRational& b);
    /// Throws std::domain_error on division by the zero function.
    friend DimRational operator/(const DimRational& a, const DimRational& b);
    DimRational& operator+=(const DimRational& b) { return *this = *this + b; }
    DimRational& operator-=(const DimRational& b) { return *this = *this - b; }
    DimRational& operator*=(const DimRational& b) { return *this = *this * b; }
    DimRational& operator/=(const DimRational& b) { return *this = *this / b; }

    friend bool operator==(const DimRational& a, const DimRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Human-readable form, e.g. "(n-10)/n".
    std::string str() const;

private:
    void canonicalize();

    RatPoly num_;
    RatPoly den_;
};

inline bool is_zero(const DimRational& d) { return d.is_zero(); }

DimRational pow(const DimRational& base, unsigned exponent);

std::string to_string(const RatPoly& p, char symbol = 'n');
std::ostream& operator<<(std::ostream& os, const DimRational& d);

} // namespace gjms6
