#include <gjms6/green_expansion.hpp>
#include <gjms6/errors.hpp>
#include <gjms6/sphere_spectral.hpp>

#include <stdexcept>
#include <string>

namespace gjms6 {

namespace {

const DimRational N = DimRational::n();

DimRational tail_polynomial() { return 3 * pow(N, 4) - 16 * pow(N, 3) - 164 * pow(N, 2) + 400 * N + 2432; }

} // namespace

std::array<DimRational, 4> source_coefficients() {
    const DimRational lead = -(N - 6);
    return {lead * 64 * (N - 4) / 9, lead * 16 * (3 * N - 20) / (9 * (N + 4)),
            lead * (-4) * (5 * N * N - 66 * N + 224),
            lead * tail_polynomial() / (3 * (N + 4) * (N + 2) * N * (N - 1))};
}

std::array<DimRational, 4> psi4_solver_coefficients() {
    const auto k = source_coefficients();
    return {-k[0] / triple_eigenvalue(4, 0), -k[1] / triple_eigenvalue(4, 1), -k[2] / triple_eigenvalue(4, 1),
            -k[3] / triple_eigenvalue(4, 2)};
}

std::array<DimRational, 4> psi4_reference_coefficients() {
    return {DimRational(1) / (135 * (N - 2)), (3 * N - 20) / (270 * (N + 4) * (N - 4) * (N - 8)),
            -(5 * N * N - 66 * N + 224) / (120 * (N - 8) * (N - 4)),
            tail_polynomial() / (576 * (N + 4) * (N + 2) * N * (N - 1))};
}

SourceTerm build_source(int n, const WeylTensor& w, const SchoutenJet& jet) {
    if (n < 7) throw std::invalid_argument("build_source: n must be at least 7");
    if (w.dim() != n) throw std::invalid_argument("build_source: tensor dimension differs from n");
    SourceTerm s;
    s.n = n;
    s.coefficients = source_coefficients();
    s.brackets = bracket_polynomials(w, jet);
    const auto& b = s.brackets;
    s.f4 = b.bracket1 * s.coefficients[0](n) + b.bracket2 * s.coefficients[1](n) + b.bracket3 * s.coefficients[2](n) +
           b.tail * s.coefficients[3](n);
    return s;
}

std::vector<Rational> span_coordinates(const HomogeneousPoly& target, const std::vector<HomogeneousPoly>& basis) {
    // Rows indexed by monomials, columns by basis elements plus the target.
    std::map<Exponent, std::size_t> row_of;
    auto note = [&](const HomogeneousPoly& p) {
        for (const auto& [e, c] : p.terms()) row_of.try_emplace(e, row_of.size());
    };
    // Zero basis elements get coordinate zero and take no part in the solve.
    std::vector<std::size_t> live;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (!basis[j].is_zero()) live.push_back(j);
    }
    for (const auto& b : basis) note(b);
    note(target);
    const std::size_t cols = live.size();
    std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [e, c] : basis[live[j]].terms()) a[row_of[e]][j] = c;
    for (const auto& [e, c] : target.terms()) a[row_of[e]][cols] = c;

    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        std::size_t p = row;
        while (p < a.size() && sgn(a[p][j]) == 0) ++p;
        if (p == a.size()) throw std::invalid_argument("span_coordinates: basis is linearly dependent");
        std::swap(a[p], a[row]);
        const Rational inv = 1 / a[row][j];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || sgn(a[r][j]) == 0) continue;
            const Rational f = a[r][j];
            for (std::size_t c = 0; c <= cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_row[j] = row++;
    }
    for (std::size_t r = row; r < a.size(); ++r) {
        if (sgn(a[r][cols]) != 0) throw std::invalid_argument("span_coordinates: target is outside the span");
    }
    std::vector<Rational> out(basis.size());
    for (std::size_t j = 0; j < cols; ++j) out[live[j]] = a[pivot_row[j]][cols];
    return out;
}

Psi4Result solve_psi4(int n, const SourceTerm& source) {
    if (n < 11) throw std::invalid_argument("solve_psi4: degree-4 kernel layers exist for n <= 10; use expand");
    if (source.n != n) throw std::invalid_argument("solve_psi4: source built for a different n");
    const auto inv = invert_triple(source.f4, n);
    if (!inv.log_terms.empty()) throw InvariantViolation("solve_psi4: unexpected log term for n >= 11");
    Psi4Result out;
    out.n = n;
    out.psi4 = inv.psi;
    const auto layers = harmonic_decompose(inv.psi);
    const auto& b = source.brackets;
    out.coefficients[0] = span_coordinates(layers.components[0], {b.bracket1})[0];
    const auto mid = span_coordinates(layers.components[1], {b.harmonic2, b.harmonic3});
    out.coefficients[1] = mid[0];
    out.coefficients[2] = mid[1];
    const Rational h0 = layers.components[2].coeff(Exponent(static_cast<std::size_t>(n), 0));
    Exponent x1_4(static_cast<std::size_t>(n), 0);
    x1_4[0] = 4;
    const Rational w2 = b.tail.coeff(x1_4);  // tail = |W|^2 r^4
    out.coefficients[3] = sgn(w2) == 0 ? Rational(0) : Rational(h0 / w2);
    return out;
}

double green_constant(int n) { return 1.0 / (8.0 * (n - 2) * (n - 4) * (n - 6) * omega(n - 1)); }

LogCoefficientN10 log_coefficient_n10(const WeylTensor& w, const SchoutenJet& jet) {
    const int n = 10;
    const auto source = build_source(n, w, jet);
    const auto inv = invert_triple(source.f4, n);
    LogCoefficientN10 out;
    out.divisor = b_combination(n, 4, 2);
    const Rational w2 = norm_sq(w);
    const auto f4_layers = harmonic_decompose(source.f4);
    const Rational f4_const = f4_layers.components[2].coeff(Exponent(static_cast<std::size_t>(n), 0));
    out.f4_h0 = sgn(w2) == 0 ? Rational(0) : f4_const / w2;
    Rational raw = 0;
    for (const auto& [j, poly] : inv.log_terms) {
        if (j != 1) throw InvariantViolation("log_coefficient_n10: log power above one");
        const auto layers = harmonic_decompose(poly);
        for (std::size_t k = 0; k + 1 < layers.components.size(); ++k) {
            if (!layers.components[k].is_zero()) throw InvariantViolation("log_coefficient_n10: log term off the r^4 H_0 layer");
        }
        raw = layers.components[2].coeff(Exponent(static_cast<std::size_t>(n), 0));
    }
    out.raw = raw;
    out.raw_over_norm = sgn(w2) == 0 ? Rational(0) : raw / w2;
    out.cn_over_norm = green_constant(n) * out.raw_over_norm.get_d();
    return out;
}

DegreeRaisingMap zero_map(int n) {
    return [n](const HomogeneousPoly& p) { return HomogeneousPoly(n, p.degree() + 2); };
}

ExpansionResult expand(int n, const std::map<int, HomogeneousPoly>& source, const DegreeRaisingMap& k, int max_order) {
    if (n < 7) throw std::invalid_argument("expand: n must be at least 7");
    if (max_order < 0) throw std::invalid_argument("expand: negative max_order");
    ExpansionResult out;
    out.n = n;
    out.max_order = max_order;
    out.psi_terms = LogRadialSeries(n);
    out.residual = LogRadialSeries(n);
    for (const auto& [d, f] : source) {
        if (f.degree() != d || f.dim() != n) {
            if (!f.is_zero()) throw std::invalid_argument("expand: source polynomial has the wrong shape");
        }
        out.residual.add(d, 0, f);
    }
    for (const auto& [key, f] : out.residual.terms()) {
        if (key.first == 0) throw std::invalid_argument("expand: source must vanish at the pole (degree 0 term)");
    }
    for (int d = 1; d <= max_order; ++d) {
        std::map<int, HomogeneousPoly> g;
        for (const auto& [key, poly] : out.residual.terms()) {
            if (key.first == d) g.emplace(key.second, poly);
        }
        if (g.empty()) continue;
        const auto u = solve_triple(g, n, d);
        LogRadialSeries step(n);
        for (const auto& [j, poly] : u) step.add(d, j, poly);
        out.psi_terms += step;
        out.residual += apply_triple_log(step);
        for (const auto& [j, poly] : u) {
            const auto kp = k(poly);
            if (kp.is_zero()) continue;
            if (kp.degree() != d + 2 || kp.dim() != n) throw std::invalid_argument("expand: K must raise degree by exactly two");
            out.residual.add(d + 2, j, kp);
        }
        for (const auto& [key, poly] : out.residual.terms()) {
            if (key.first == d) {
                throw InvariantViolation("expand: residual survives at degree " + std::to_string(d));
            }
        }
    }
    for (const auto& [key, poly] : out.psi_terms.terms()) {
        if (key.second >= 1) out.log_coefficients.emplace(key, poly);
    }
    return out;
}

} // namespace gjms6
