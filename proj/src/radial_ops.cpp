#include <gjms6/radial_ops.hpp>
#include <gjms6/errors.hpp>

#include <string>

namespace gjms6 {

namespace {

Rational falling(int k, int d) {
    Rational out = 1;
    for (int t = 0; t < d; ++t) out *= (k - t);
    return out;
}

std::array<Rational, 3> green_alphas(int n) { return {Rational(2 - n), Rational(4 - n), Rational(6 - n)}; }

std::array<DimRational, 3> green_alphas() {
    const DimRational n = DimRational::n();
    return {2 - n, 4 - n, 6 - n};
}

} // namespace

Rational eigen_A(const Rational& alpha, int m, int i, int n) {
    return (alpha + 2 * i) * (2 * m - 2 * i + alpha + n - 2);
}

Rational eigen_B(const Rational& alpha, int m, int n) { return 2 * m + 2 * alpha + n - 2; }

DimRational eigen_A(const DimRational& alpha, int m, int i) {
    return (alpha + 2 * i) * (DimRational(2 * m - 2 * i - 2) + alpha + DimRational::n());
}

DimRational eigen_B(const DimRational& alpha, int m) {
    return DimRational(2 * m - 2) + 2 * alpha + DimRational::n();
}

Rational triple_eigenvalue(int n, int m, int i) {
    Rational out = 1;
    for (const auto& a : green_alphas(n)) out *= eigen_A(a, m, i, n);
    return out;
}

DimRational triple_eigenvalue(int m, int i) {
    DimRational out(1);
    for (const auto& a : green_alphas()) out *= eigen_A(a, m, i);
    return out;
}

Rational b_combination(int n, int m, int i) { return layer_symbol(green_alphas(n), n, m, i)[1]; }

DimRational b_combination(int m, int i) {
    const auto al = green_alphas();
    DimRational out(0);
    for (std::size_t k = 0; k < 3; ++k) {
        DimRational term(1);
        for (std::size_t j = 0; j < 3; ++j) term *= (j == k) ? eigen_B(al[j], m) : eigen_A(al[j], m, i);
        out += term;
    }
    return out;
}

std::array<Rational, 7> layer_symbol(const std::array<Rational, 3>& alphas, int n, int m, int i) {
    std::array<Rational, 7> c{};
    c[0] = 1;
    int deg = 0;
    for (const auto& a : alphas) {
        const Rational q[3] = {eigen_A(a, m, i, n), eigen_B(a, m, n), Rational(1)};
        std::array<Rational, 7> next{};
        for (int x = 0; x <= deg; ++x) {
            for (int y = 0; y < 3; ++y) next[static_cast<std::size_t>(x + y)] += c[static_cast<std::size_t>(x)] * q[y];
        }
        c = next;
        deg += 2;
    }
    return c;
}

int LogRadialSeries::max_log_power() const {
    int out = 0;
    for (const auto& [key, psi] : terms_) out = std::max(out, key.second);
    return out;
}

HomogeneousPoly LogRadialSeries::at(int m, int j) const {
    auto it = terms_.find({m, j});
    return it == terms_.end() ? HomogeneousPoly(n_, m) : it->second;
}

void LogRadialSeries::add(int m, int j, const HomogeneousPoly& psi) {
    if (psi.is_zero()) return;
    if (psi.dim() != n_ || psi.degree() != m) throw std::invalid_argument("LogRadialSeries: term shape mismatch");
    auto [it, inserted] = terms_.try_emplace({m, j}, psi);
    if (!inserted) {
        it->second += psi;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LogRadialSeries& LogRadialSeries::operator+=(const LogRadialSeries& b) {
    if (b.n_ != n_) throw std::invalid_argument("LogRadialSeries: dimension mismatch");
    for (const auto& [key, psi] : b.terms_) add(key.first, key.second, psi);
    return *this;
}

LogRadialSeries apply_triple_log(const LogRadialSeries& series, const DimRational& gamma,
                                 const DimRational& beta, const DimRational& alpha) {
    const int n = series.dim();
    const std::array<Rational, 3> al = {gamma(n), beta(n), alpha(n)};
    LogRadialSeries out(n);
    for (const auto& [key, psi] : series.terms()) {
        const auto [m, j] = key;
        const auto dec = harmonic_decompose(psi);
        for (int i = 0; i < static_cast<int>(dec.components.size()); ++i) {
            const auto& h = dec.components[static_cast<std::size_t>(i)];
            if (h.is_zero()) continue;
            const auto c = layer_symbol(al, n, m, i);
            const auto layer = mul_r2k(h, i);
            for (int d = 0; d <= std::min(6, j); ++d) {
                const Rational coef = c[static_cast<std::size_t>(d)] * falling(j, d);
                if (sgn(coef) != 0) out.add(m, j - d, layer * coef);
            }
        }
    }
    return out;
}

LogRadialSeries apply_triple_log(const LogRadialSeries& series) {
    const auto al = green_alphas();
    return apply_triple_log(series, al[0], al[1], al[2]);
}

std::map<int, HomogeneousPoly> solve_triple(const std::map<int, HomogeneousPoly>& g, int n, int m) {
    std::map<int, HarmonicDecomposition> dec;
    int top = -1;
    for (const auto& [j, gj] : g) {
        if (gj.is_zero()) continue;
        dec.emplace(j, harmonic_decompose(gj));
        top = std::max(top, j);
    }
    std::map<int, HomogeneousPoly> u;
    if (top < 0) return u;
    const auto al = green_alphas(n);

    for (int i = 0; i <= m / 2; ++i) {
        std::vector<HomogeneousPoly> gl(static_cast<std::size_t>(top + 1), HomogeneousPoly(n, m - 2 * i));
        bool any = false;
        for (const auto& [j, d] : dec) {
            gl[static_cast<std::size_t>(j)] = d.components[static_cast<std::size_t>(i)];
            any = any || !gl[static_cast<std::size_t>(j)].is_zero();
        }
        if (!any) continue;
        const auto c = layer_symbol(al, n, m, i);
        // ul[k] is the coefficient of log^k r on this layer.
        std::vector<HomogeneousPoly> ul(static_cast<std::size_t>(top + 2), HomogeneousPoly(n, m - 2 * i));
        auto tail = [&](int j, int first_d) {
            HomogeneousPoly acc = -gl[static_cast<std::size_t>(j)];
            for (int d = first_d; d <= 6 && j + d <= top + 1; ++d) {
                const auto& uk = ul[static_cast<std::size_t>(j + d)];
                if (!uk.is_zero()) acc -= uk * (c[static_cast<std::size_t>(d)] * falling(j + d, d));
            }
            return acc;
        };
        if (sgn(c[0]) != 0) {
            for (int j = top; j >= 0; --j) ul[static_cast<std::size_t>(j)] = tail(j, 1) * (1 / c[0]);
        } else if (sgn(c[1]) != 0) {
            for (int j = top; j >= 0; --j) {
                ul[static_cast<std::size_t>(j + 1)] = tail(j, 2) * (1 / (c[1] * (j + 1)));
            }
        } else {
            throw UnsupportedDegeneracy("triple eigenvalue and B-combination both vanish at n=" +
                                        std::to_string(n) + ", m=" + std::to_string(m) +
                                        ", i=" + std::to_string(i));
        }
        for (int k = 0; k <= top + 1; ++k) {
            const auto& uk = ul[static_cast<std::size_t>(k)];
            if (uk.is_zero()) continue;
            auto [it, inserted] = u.try_emplace(k, mul_r2k(uk, i));
            if (!inserted) it->second += mul_r2k(uk, i);
        }
    }
    return u;
}

InvertResult invert_triple(const HomogeneousPoly& rhs, int n) {
    const int m = rhs.degree();
    auto u = solve_triple({{0, rhs}}, n, m);
    InvertResult out{HomogeneousPoly(n, m), {}};
    for (auto& [k, poly] : u) {
        if (k == 0) out.psi = poly;
        else out.log_terms.emplace_back(k, poly);
    }
    return out;
}

} // namespace gjms6
