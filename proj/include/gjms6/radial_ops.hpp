#pragma once

#include <gjms6/dim_rational.hpp>
#include <gjms6/homogeneous_poly.hpp>

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace gjms6 {

/// A_alpha = r^2 Delta_0 + 2 alpha r d/dr + alpha(alpha + n - 2), acting on the
/// homogeneous factor once the power r^alpha has been pulled out.
struct RadialOperator {
    DimRational alpha;
};

/// A_alpha on r^{2i} H_{m-2i}: (alpha + 2i)(2m - 2i + alpha + n - 2).
Rational eigen_A(const Rational& alpha, int m, int i, int n);
/// B_alpha = dA/dalpha on degree m: 2m + 2 alpha + n - 2.
Rational eigen_B(const Rational& alpha, int m, int n);
DimRational eigen_A(const DimRational& alpha, int m, int i);
DimRational eigen_B(const DimRational& alpha, int m);

/// Eigenvalue of A_{2-n} A_{4-n} A_{6-n} on r^{2i} H_{m-2i}.
Rational triple_eigenvalue(int n, int m, int i);
DimRational triple_eigenvalue(int m, int i);

/// B_g A_b A_a + A_g B_b A_a + A_g A_b B_a on r^{2i} H_{m-2i}.
Rational b_combination(int n, int m, int i);
DimRational b_combination(int m, int i);

/// On a fixed layer every A acts on psi log^k r as a + b D + D^2, where D lowers
/// the log power: D log^k r = k log^{k-1} r. The composition of three such
/// operators is sum_d c[d] D^d; c[0] is the triple eigenvalue and c[1] the
/// B-combination.
std::array<Rational, 7> layer_symbol(const std::array<Rational, 3>& alphas, int n, int m, int i);

/// Sum over (degree m, log power j) of r^{6-n} psi log^j r; the r^{6-n} factor is
/// implicit. Zero coefficients are dropped.
class LogRadialSeries {
public:
    using Key = std::pair<int, int>;

    explicit LogRadialSeries(int n) : n_(n) {}

    int dim() const { return n_; }
    const std::map<Key, HomogeneousPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_log_power() const;

    /// Zero polynomial of the right degree when absent.
    HomogeneousPoly at(int m, int j) const;
    void add(int m, int j, const HomogeneousPoly& psi);

    LogRadialSeries& operator+=(const LogRadialSeries& b);
    friend LogRadialSeries operator+(LogRadialSeries a, const LogRadialSeries& b) { return a += b; }
    friend bool operator==(const LogRadialSeries& a, const LogRadialSeries& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    std::map<Key, HomogeneousPoly> terms_;
};

/// A_gamma A_beta A_alpha applied termwise, including every log-derivative term.
LogRadialSeries apply_triple_log(const LogRadialSeries& series, const DimRational& gamma,
                                 const DimRational& beta, const DimRational& alpha);
/// The Green's-function triple A_{2-n} A_{4-n} A_{6-n}.
LogRadialSeries apply_triple_log(const LogRadialSeries& series);

struct InvertResult {
    HomogeneousPoly psi;
    /// (log power, coefficient) pairs emitted on kernel layers.
    std::vector<std::pair<int, HomogeneousPoly>> log_terms;
};

/// Solves A_{2-n}A_{4-n}A_{6-n} u + rhs = 0 at the degree of rhs. Non-kernel
/// layers give psi = -rhs/eigenvalue; kernel layers give a log r term with
/// coefficient -rhs/B-combination.
InvertResult invert_triple(const HomogeneousPoly& rhs, int n);

/// General layered solve of A_{2-n}A_{4-n}A_{6-n} u + g = 0 where g is a
/// polynomial in log r at one degree: g = sum_j g[j] log^j r. The returned u is
/// keyed by log power. On kernel layers the log-free part of u is set to zero.
/// Throws UnsupportedDegeneracy if both c[0] and c[1] vanish on a layer carrying
/// data.
std::map<int, HomogeneousPoly> solve_triple(const std::map<int, HomogeneousPoly>& g, int n, int m);

} // namespace gjms6
