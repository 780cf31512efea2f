#pragma once

#include <gjms6/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gjms6 {

/// Dense univariate polynomial over a field T, coefficients stored from the
/// constant term upward. The zero polynomial has no coefficients.
///
/// T must provide + - * /, construction from int, and a free `is_zero(T)`.
template <class T>
class UPoly {
public:
    UPoly() = default;
    UPoly(T c) : coeffs_{std::move(c)} { trim(); }
    explicit UPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// The monomial x.
    static UPoly x() { return UPoly(std::vector<T>{T(0), T(1)}); }

    bool zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    T coeff(int k) const {
        return (k < 0 || k > degree()) ? T(0) : coeffs_[static_cast<std::size_t>(k)];
    }
    T leading() const { return zero() ? T(0) : coeffs_.back(); }

    T operator()(const T& at) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * at + *it;
        }
        return acc;
    }

    UPoly operator-() const {
        UPoly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] = c[k] + a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] = c[k] + b.coeffs_[k];
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.zero() || b.zero()) return UPoly();
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return UPoly(std::move(c));
    }

    UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
    UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
    UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
            if (!is_zero(a.coeffs_[k] - b.coeffs_[k])) return false;
        }
        return true;
    }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.zero()) throw std::domain_error("UPoly: division by the zero polynomial");
        std::vector<T> rem = a.coeffs_;
        const int db = b.degree();
        const int dq = a.degree() - db;
        if (dq < 0) return {UPoly(), a};
        std::vector<T> quot(static_cast<std::size_t>(dq + 1), T(0));
        const T lead = b.leading();
        for (int k = dq; k >= 0; --k) {
            const T c = rem[static_cast<std::size_t>(k + db)] / lead;
            quot[static_cast<std::size_t>(k)] = c;
            if (is_zero(c)) continue;
            for (int j = 0; j <= db; ++j) {
                auto& slot = rem[static_cast<std::size_t>(k + j)];
                slot = slot - c * b.coeffs_[static_cast<std::size_t>(j)];
            }
        }
        return {UPoly(std::move(quot)), UPoly(std::move(rem))};
    }

    /// Monic gcd (zero if both inputs are zero).
    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.zero()) {
            UPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    UPoly monic() const {
        if (zero()) return *this;
        const T lead = leading();
        UPoly out = *this;
        for (auto& c : out.coeffs_) c = c / lead;
        return out;
    }

    UPoly scaled(const T& s) const {
        UPoly out = *this;
        for (auto& c : out.coeffs_) c = c * s;
        out.trim();
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

} // namespace gjms6
