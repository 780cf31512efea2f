#include <gjms6/homogeneous_poly.hpp>
#include <gjms6/errors.hpp>

#include <sstream>
#include <stdexcept>

namespace gjms6 {

HomogeneousPoly::HomogeneousPoly(int n, int m) : n_(n), m_(m) {
    if (n < 1 || n > 255) throw std::invalid_argument("HomogeneousPoly: dimension out of range");
    if (m < 0) throw std::invalid_argument("HomogeneousPoly: negative degree");
}

HomogeneousPoly HomogeneousPoly::constant(int n, const Rational& c) {
    HomogeneousPoly p(n, 0);
    p.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
    return p;
}

HomogeneousPoly HomogeneousPoly::variable(int n, int i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(n, e);
}

HomogeneousPoly HomogeneousPoly::monomial(int n, const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("monomial: exponent length != n");
    int m = 0;
    for (auto v : e) m += v;
    HomogeneousPoly p(n, m);
    p.add_term(e, c);
    return p;
}

HomogeneousPoly HomogeneousPoly::r_power(int n, int k) {
    HomogeneousPoly p = constant(n, 1);
    for (int j = 0; j < k; ++j) p = mul_r2(p);
    return p;
}

Rational HomogeneousPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousPoly::add_term(const Exponent& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

HomogeneousPoly HomogeneousPoly::operator-() const {
    HomogeneousPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

static void check_compatible(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.dim() != b.dim() || a.degree() != b.degree()) {
        throw std::invalid_argument("HomogeneousPoly: dimension or degree mismatch in sum");
    }
}

// A zero polynomial carries no degree information worth defending, so it adopts
// the degree of whatever is added to it.
HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& b) {
    if (b.is_zero()) return *this;
    if (is_zero() && n_ == b.n_) m_ = b.m_;
    check_compatible(*this, b);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& b) {
    if (b.is_zero()) return *this;
    if (is_zero() && n_ == b.n_) m_ = b.m_;
    check_compatible(*this, b);
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
}

HomogeneousPoly& HomogeneousPoly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("HomogeneousPoly: dimension mismatch in product");
    HomogeneousPoly out(a.n_, a.m_ + b.m_);
    Exponent e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string HomogeneousPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        bool wrote = false;
        if (mag != 1 || m_ == 0) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << int(e[i]);
            wrote = true;
        }
    }
    return os.str();
}

HomogeneousPoly laplacian(const HomogeneousPoly& p) {
    if (p.degree() < 2) return HomogeneousPoly(p.dim(), 0);
    HomogeneousPoly out(p.dim(), p.degree() - 2);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 2) continue;
            Exponent f = e;
            f[i] = static_cast<std::uint8_t>(f[i] - 2);
            out.add_term(f, c * (int(e[i]) * (int(e[i]) - 1)));
        }
    }
    return out;
}

HomogeneousPoly partial(const HomogeneousPoly& p, int i) {
    HomogeneousPoly out(p.dim(), p.degree() > 0 ? p.degree() - 1 : 0);
    const auto idx = static_cast<std::size_t>(i);
    for (const auto& [e, c] : p.terms()) {
        if (e[idx] == 0) continue;
        Exponent f = e;
        f[idx] = static_cast<std::uint8_t>(f[idx] - 1);
        out.add_term(f, c * int(e[idx]));
    }
    return out;
}

HomogeneousPoly mul_r2(const HomogeneousPoly& p) {
    HomogeneousPoly out(p.dim(), p.degree() + 2);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            Exponent f = e;
            f[i] = static_cast<std::uint8_t>(f[i] + 2);
            out.add_term(f, c);
        }
    }
    return out;
}

HomogeneousPoly mul_r2k(const HomogeneousPoly& p, int k) {
    HomogeneousPoly out = p;
    for (int j = 0; j < k; ++j) out = mul_r2(out);
    return out;
}

Rational evaluate(const HomogeneousPoly& p, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != p.dim()) throw std::invalid_argument("evaluate: point has wrong length");
    Rational acc = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int j = 0; j < e[i]; ++j) t *= x[i];
        }
        acc += t;
    }
    return acc;
}

Rational laplacian_layer_factor(int n, int d, int k) {
    return Rational(2 * k * (2 * d + n + 2 * k - 2));
}

HomogeneousPoly HarmonicDecomposition::reconstruct() const {
    HomogeneousPoly out(n, m);
    for (std::size_t k = 0; k < components.size(); ++k) {
        out += mul_r2k(components[k], static_cast<int>(k));
    }
    return out;
}

HarmonicDecomposition harmonic_decompose(const HomogeneousPoly& p) {
    const int n = p.dim();
    const int m = p.degree();
    const int K = m / 2;
    HarmonicDecomposition out{n, m, {}};
    out.components.assign(static_cast<std::size_t>(K + 1), HomogeneousPoly(n, 0));
    HomogeneousPoly rest = p;
    // Delta^k annihilates r^{2j} h for j < k, so peel layers from the top.
    for (int k = K; k >= 0; --k) {
        const int d = m - 2 * k;
        HomogeneousPoly top = rest;
        Rational factor = 1;
        for (int j = 1; j <= k; ++j) {
            top = laplacian(top);
            factor *= laplacian_layer_factor(n, d, j);
        }
        top *= Rational(1) / factor;
        out.components[static_cast<std::size_t>(k)] = top;
        rest -= mul_r2k(top, k);
    }
    if (!rest.is_zero()) throw InvariantViolation("harmonic_decompose: nonzero remainder");
    return out;
}

} // namespace gjms6
