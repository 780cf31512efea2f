#include <gjms6/weyl.hpp>
#include <gjms6/errors.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <type_traits>
#include <random>
#include <stdexcept>

namespace gjms6 {

namespace {

using i128 = __int128;

std::size_t idx4(int n, int i, int j, int k, int l) {
    return ((static_cast<std::size_t>(i) * n + j) * n + k) * n + l;
}

Integer to_integer(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    Integer out = (hi << 64) + lo;
    return neg ? Integer(-out) : out;
}

// Dense accumulator for a homogeneous polynomial of small degree, indexed by the
// sorted variable tuple.
template <class Int>
class DenseForm {
public:
    DenseForm(int n, int m) : n_(n), m_(m), acc_(static_cast<std::size_t>(std::pow(n, m)), Int(0)) {}

    void add(std::array<int, 4> vars, const Int& c) {
        std::sort(vars.begin(), vars.begin() + m_);
        std::size_t k = 0;
        for (int t = 0; t < m_; ++t) k = k * static_cast<std::size_t>(n_) + static_cast<std::size_t>(vars[static_cast<std::size_t>(t)]);
        acc_[k] += c;
    }

    HomogeneousPoly finish(const Rational& scale) const {
        HomogeneousPoly out(n_, m_);
        for (std::size_t k = 0; k < acc_.size(); ++k) {
            if (acc_[k] == 0) continue;
            Exponent e(static_cast<std::size_t>(n_), 0);
            std::size_t r = k;
            for (int t = 0; t < m_; ++t) {
                ++e[r % static_cast<std::size_t>(n_)];
                r /= static_cast<std::size_t>(n_);
            }
            Rational c;
            if constexpr (std::is_same_v<Int, i128>) c = Rational(to_integer(acc_[k]));
            else c = Rational(acc_[k]);
            out.add_term(e, c * scale);
        }
        return out;
    }

private:
    int n_;
    int m_;
    std::vector<Int> acc_;
};

template <class Int>
HomogeneousPoly quartic_impl(int n, const std::vector<Int>& z, const Rational& scale) {
    DenseForm<Int> form(n, 4);
    std::vector<std::pair<std::array<int, 2>, Int>> s;
    for (int k = 0; k < n; ++k) {
        // W_iklj x^i x^j is symmetric in (k, l).
        for (int l = k; l < n; ++l) {
            const Int weight = l == k ? 1 : 2;
            s.clear();
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    Int c = z[idx4(n, i, k, l, j)];
                    if (j != i) c += z[idx4(n, j, k, l, i)];
                    if (c != 0) s.push_back({{i, j}, c});
                }
            }
            for (std::size_t p = 0; p < s.size(); ++p) {
                form.add({s[p].first[0], s[p].first[1], s[p].first[0], s[p].first[1]}, weight * s[p].second * s[p].second);
                for (std::size_t q = p + 1; q < s.size(); ++q) {
                    Int c = 2 * weight * s[p].second * s[q].second;
                    form.add({s[p].first[0], s[p].first[1], s[q].first[0], s[q].first[1]}, c);
                }
            }
        }
    }
    return form.finish(scale);
}

template <class Int>
HomogeneousPoly vector_impl(int n, const std::vector<Int>& z, const Rational& scale) {
    DenseForm<Int> form(n, 2);
    std::vector<Int> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            for (int s = 0; s < n; ++s) {
                for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = z[idx4(n, i, k, l, s)] + z[idx4(n, i, l, k, s)];
                for (int i = 0; i < n; ++i) {
                    const Int& vi = v[static_cast<std::size_t>(i)];
                    if (vi == 0) continue;
                    form.add({i, i, 0, 0}, vi * vi);
                    for (int j = i + 1; j < n; ++j) {
                        Int c = vi * v[static_cast<std::size_t>(j)];
                        c += c;
                        form.add({i, j, 0, 0}, c);
                    }
                }
            }
        }
    }
    return form.finish(scale);
}

// Runs f on 128-bit integers when the scaled entries are small enough that no
// accumulation can overflow, and on GMP integers otherwise.
template <class F>
HomogeneousPoly with_integer_entries(const WeylTensor& w, F&& f) {
    std::vector<Integer> z;
    const Integer d = w.integer_entries(z);
    const Rational scale = Rational(1) / Rational(d * d);
    const Integer limit = Integer(1) << 40;
    const bool small = std::all_of(z.begin(), z.end(), [&](const Integer& v) { return abs(v) < limit; });
    if (small) {
        std::vector<i128> zi(z.size());
        for (std::size_t k = 0; k < z.size(); ++k) zi[k] = z[k].get_si();
        return f(zi, scale);
    }
    return f(z, scale);
}

} // namespace

WeylTensor::WeylTensor(int n) : n_(n), pairs_(n * (n - 1) / 2) {
    reduced_.assign(static_cast<std::size_t>(pairs_ * (pairs_ + 1) / 2), Rational(0));
}

int WeylTensor::pair_index(int i, int j) const {
    // i < j; pairs enumerated row by row.
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

WeylTensor WeylTensor::from_function(int n, const std::function<Rational(int, int, int, int)>& w) {
    WeylTensor out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = k + 1; l < n; ++l) {
                    const int p = out.pair_index(i, j), q = out.pair_index(k, l);
                    if (p > q) continue;
                    out.reduced_[static_cast<std::size_t>(q * (q + 1) / 2 + p)] = w(i, j, k, l);
                }
            }
        }
    }
    return out;
}

Rational WeylTensor::operator()(int i, int j, int k, int l) const {
    if (i == j || k == l) return 0;
    bool neg = false;
    if (i > j) {
        std::swap(i, j);
        neg = !neg;
    }
    if (k > l) {
        std::swap(k, l);
        neg = !neg;
    }
    int p = pair_index(i, j), q = pair_index(k, l);
    if (p > q) std::swap(p, q);
    const Rational& v = reduced_[static_cast<std::size_t>(q * (q + 1) / 2 + p)];
    return neg ? Rational(-v) : v;
}

bool WeylTensor::is_zero() const {
    return std::all_of(reduced_.begin(), reduced_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

Integer WeylTensor::integer_entries(std::vector<Integer>& z) const {
    Integer d = 1;
    for (const auto& v : reduced_) {
        if (sgn(v) != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
    }
    const auto n = static_cast<std::size_t>(n_);
    z.assign(n * n * n * n, Integer(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                for (int l = 0; l < n_; ++l) {
                    const Rational v = (*this)(i, j, k, l) * d;
                    z[idx4(n_, i, j, k, l)] = v.get_num();
                }
    return d;
}

WeylTensor random_weyl(int n, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("random_weyl: the Weyl tensor vanishes identically for n < 4");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    const auto N = static_cast<std::size_t>(n);
    const std::size_t size = N * N * N * N;
    auto at = [n](std::vector<long>& t, int i, int j, int k, int l) -> long& { return t[idx4(n, i, j, k, l)]; };
    for (;;) {
        std::vector<long> a(size), t1(size), t2(size), r(size), w(size);
        for (auto& v : a) v = entry(rng);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        at(t1, i, j, k, l) = at(a, i, j, k, l) - at(a, j, i, k, l) - at(a, i, j, l, k) + at(a, j, i, l, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) at(t2, i, j, k, l) = at(t1, i, j, k, l) + at(t1, k, l, i, j);
        // Remove the totally antisymmetric part (first Bianchi projection), scaled by 3.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        at(r, i, j, k, l) = 2 * at(t2, i, j, k, l) - at(t2, i, k, l, j) - at(t2, i, l, j, k);
        std::vector<long> ric(N * N, 0);
        long s = 0;
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                long acc = 0;
                for (int i = 0; i < n; ++i) acc += at(r, i, j, i, l);
                ric[static_cast<std::size_t>(j * n + l)] = acc;
            }
        for (int i = 0; i < n; ++i) s += ric[static_cast<std::size_t>(i * n + i)];
        auto rc = [&](int i, int j) { return ric[static_cast<std::size_t>(i * n + j)]; };
        auto dl = [](int i, int j) { return i == j ? 1L : 0L; };
        // Ricci decomposition, multiplied through by (n-1)(n-2).
        bool nonzero = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        long v = static_cast<long>(n - 1) * (n - 2) * at(r, i, j, k, l) -
                                 static_cast<long>(n - 1) *
                                     (rc(i, k) * dl(j, l) + rc(j, l) * dl(i, k) - rc(i, l) * dl(j, k) - rc(j, k) * dl(i, l)) +
                                 s * (dl(i, k) * dl(j, l) - dl(i, l) * dl(j, k));
                        at(w, i, j, k, l) = v;
                        nonzero = nonzero || v != 0;
                    }
        if (!nonzero) continue;
        return WeylTensor::from_function(n, [&](int i, int j, int k, int l) -> Rational { return Rational(at(w, i, j, k, l)); });
    }
}

bool check_weyl_invariants(const WeylTensor& w, std::string* why) {
    const int n = w.dim();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Rational v = w(i, j, k, l);
                    if (v != -w(j, i, k, l) || v != -w(i, j, l, k)) return fail("antisymmetry");
                    if (v != w(k, l, i, j)) return fail("pair symmetry");
                    if (v + w(i, k, l, j) + w(i, l, j, k) != 0) return fail("first Bianchi identity");
                }
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            Rational tr = 0;
            for (int i = 0; i < n; ++i) tr += w(i, j, i, l);
            if (sgn(tr) != 0) return fail("nonzero trace");
        }
    return true;
}

Rational norm_sq(const WeylTensor& w) {
    const int n = w.dim();
    Rational acc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Rational v = w(i, j, k, l);
                    acc += v * v;
                }
    return acc;
}

HomogeneousPoly quartic_form(const WeylTensor& w) {
    return with_integer_entries(w, [&](const auto& z, const Rational& scale) { return quartic_impl(w.dim(), z, scale); });
}

HomogeneousPoly vector_form(const WeylTensor& w) {
    return with_integer_entries(w, [&](const auto& z, const Rational& scale) { return vector_impl(w.dim(), z, scale); });
}

ContractionSums contraction_sums(const WeylTensor& w) {
    const int n = w.dim();
    ContractionSums out{0, 0, norm_sq(w)};
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int s = 0; s < n; ++s) {
                    const Rational v = w(i, k, l, s) + w(i, l, k, s);
                    out.pair_sum_sq += v * v;
                    out.cross += w(i, k, l, s) * w(s, k, l, i);
                }
    return out;
}

SchoutenJet random_schouten_jet(const WeylTensor& w, std::uint64_t seed) {
    const int n = w.dim();
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> entry(-3, 3);
    SchoutenJet jet{std::vector<std::vector<Rational>>(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n))),
                    norm_sq(w)};
    for (std::size_t i = 0; i < jet.hess.size(); ++i)
        for (std::size_t j = i; j < jet.hess.size(); ++j) jet.hess[i][j] = jet.hess[j][i] = entry(rng);
    Rational trace = 0;
    for (std::size_t i = 0; i < jet.hess.size(); ++i) trace += jet.hess[i][i];
    jet.hess[0][0] += -jet.w_norm_sq / (12 * (n - 1)) - trace;
    return jet;
}

SchoutenJet zero_jet(int n) {
    return {std::vector<std::vector<Rational>>(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n))), 0};
}

bool check_jet(const SchoutenJet& jet, std::string* why) {
    const std::size_t n = jet.hess.size();
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (jet.hess[i].size() != n) {
            if (why) *why = "hess is not square";
            return false;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (jet.hess[i][j] != jet.hess[j][i]) {
                if (why) *why = "hess is not symmetric";
                return false;
            }
        }
        trace += jet.hess[i][i];
    }
    if (trace != -jet.w_norm_sq / (12 * (static_cast<long>(n) - 1))) {
        if (why) *why = "trace of hess differs from -|W|^2/(12(n-1))";
        return false;
    }
    return true;
}

HomogeneousPoly hess_form(const SchoutenJet& jet) {
    const int n = static_cast<int>(jet.hess.size());
    HomogeneousPoly out(n, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Exponent e(static_cast<std::size_t>(n), 0);
            ++e[static_cast<std::size_t>(i)];
            ++e[static_cast<std::size_t>(j)];
            const Rational& h = jet.hess[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            out.add_term(e, i == j ? h : Rational(2 * h));
        }
    }
    return out;
}

BracketPolynomials bracket_polynomials(const WeylTensor& w, const SchoutenJet& jet) {
    const int n = w.dim();
    if (static_cast<int>(jet.hess.size()) != n) throw std::invalid_argument("bracket_polynomials: jet dimension mismatch");
    const Rational w2 = jet.w_norm_sq;
    const auto r2 = HomogeneousPoly::r_power(n, 1);
    const auto r4 = HomogeneousPoly::r_power(n, 2);
    const auto q = quartic_form(w);
    const auto v = vector_form(w);
    BracketPolynomials b{HomogeneousPoly(n, 4), HomogeneousPoly(n, 4), HomogeneousPoly(n, 4), HomogeneousPoly(n, 4),
                         HomogeneousPoly(n, 2), HomogeneousPoly(n, 2)};
    b.bracket1 = q - mul_r2(v) * make_rational(1, n + 4) + r4 * (3 * w2 / (2 * (n + 4) * (n + 2)));
    b.harmonic2 = v - r2 * (3 * w2 / n);
    b.harmonic3 = hess_form(jet) + r2 * (w2 / (12 * n * (n - 1)));
    b.bracket2 = mul_r2(b.harmonic2);
    b.bracket3 = mul_r2(b.harmonic3);
    b.tail = r4 * w2;
    if (!laplacian(b.bracket1).is_zero()) throw InvariantViolation("bracket1 is not harmonic");
    if (!laplacian(b.harmonic2).is_zero()) throw InvariantViolation("bracket2 is not harmonic");
    if (!laplacian(b.harmonic3).is_zero()) throw InvariantViolation("bracket3 is not harmonic");
    return b;
}

HomogeneousPoly bach_quadratic(const WeylTensor& w, const SchoutenJet& jet) {
    const int n = w.dim();
    return vector_form(w) * make_rational(-2, 9 * (n - 2)) +
           HomogeneousPoly::r_power(n, 1) * (jet.w_norm_sq / (12 * (n - 2) * (n - 1))) -
           hess_form(jet) * make_rational(7 * n - 8, n - 2);
}

HomogeneousPoly schouten_quartic(const WeylTensor& w, const SchoutenJet& jet) {
    const int n = w.dim();
    return quartic_form(w) * make_rational(-2, 9 * (n - 2)) - mul_r2(hess_form(jet)) * make_rational(1, n - 2);
}

HomogeneousPoly laplacian_schouten_quadratic(const WeylTensor& w, const SchoutenJet& jet) {
    return laplacian(schouten_quartic(w, jet) * make_rational(1, 2)) - hess_form(jet) * Rational(5);
}

HomogeneousPoly t4_quadratic(const WeylTensor& w, const SchoutenJet& jet) {
    const int n = w.dim();
    Rational trace = 0;
    for (std::size_t i = 0; i < jet.hess.size(); ++i) trace += jet.hess[i][i];
    return HomogeneousPoly::r_power(n, 1) * ((n - 6) * trace) - bach_quadratic(w, jet) * make_rational(16, n - 4);
}

} // namespace gjms6
