#include <gjms6/dim_rational.hpp>
#include <gjms6/errors.hpp>

#include <ostream>
#include <sstream>

namespace gjms6 {

DimRational::DimRational(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.zero()) throw std::domain_error("DimRational: zero denominator");
    canonicalize();
}

DimRational DimRational::n() { return DimRational(RatPoly::x(), RatPoly(Rational(1))); }

DimRational DimRational::poly(std::initializer_list<long> coeffs_low_to_high) {
    std::vector<Rational> c;
    for (long v : coeffs_low_to_high) c.emplace_back(v);
    return DimRational(RatPoly(std::move(c)), RatPoly(Rational(1)));
}

void DimRational::canonicalize() {
    if (num_.zero()) {
        den_ = RatPoly(Rational(1));
        return;
    }
    const RatPoly g = RatPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = RatPoly::divmod(num_, g).first;
        den_ = RatPoly::divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational DimRational::eval(const Rational& at) const {
    const Rational d = den_(at);
    if (sgn(d) == 0) {
        throw PoleError("DimRational " + str() + " has a pole at n = " + at.get_str());
    }
    Rational v = num_(at) / d;
    v.canonicalize();
    return v;
}

DimRational DimRational::operator-() const { return DimRational(-num_, den_); }

DimRational operator+(const DimRational& a, const DimRational& b) {
    if (a.den_ == b.den_) return DimRational(a.num_ + b.num_, a.den_);
    return DimRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

DimRational operator-(const DimRational& a, const DimRational& b) { return a + (-b); }

DimRational operator*(const DimRational& a, const DimRational& b) {
    return DimRational(a.num_ * b.num_, a.den_ * b.den_);
}

DimRational operator/(const DimRational& a, const DimRational& b) {
    if (b.is_zero()) throw std::domain_error("DimRational: division by zero");
    return DimRational(a.num_ * b.den_, a.den_ * b.num_);
}

DimRational pow(const DimRational& base, unsigned exponent) {
    DimRational out(1);
    for (unsigned k = 0; k < exponent; ++k) out *= base;
    return out;
}

std::string to_string(const RatPoly& p, char symbol) {
    if (p.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) < 0 ? "-" : "+");
        else if (sgn(c) < 0) os << "-";
        c = abs(c);
        const bool unit = (c == 1);
        if (!unit || k == 0) {
            os << c.get_str();
            if (k > 0) os << "*";
        }
        if (k >= 1) os << symbol;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

std::string DimRational::str() const {
    const std::string top = to_string(num_);
    if (is_polynomial()) return top;
    const bool wrap_top = num_.degree() > 0 && top.find_first_of("+-", 1) != std::string::npos;
    std::string out = wrap_top ? "(" + top + ")" : top;
    return out + "/(" + to_string(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const DimRational& d) { return os << d.str(); }

} // namespace gjms6
