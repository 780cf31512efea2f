#pragma once

#include <gjms6/dim_rational.hpp>
#include <gjms6/homogeneous_poly.hpp>
#include <gjms6/radial_ops.hpp>
#include <gjms6/weyl.hpp>

#include <array>
#include <functional>
#include <map>
#include <utility>

namespace gjms6 {

/// Leading part f4 of f in P(r^{6-n}) = c_n delta + r^{-n} f, written as
/// f4 = sum_i coefficients[i] * brackets_i with brackets (bracket1, bracket2,
/// bracket3, tail).
struct SourceTerm {
    int n = 0;
    HomogeneousPoly f4;
    std::array<DimRational, 4> coefficients;
    BracketPolynomials brackets;
};

/// The four bracket multipliers of f4 as functions of n, overall factor
/// -(n-6) included.
std::array<DimRational, 4> source_coefficients();

SourceTerm build_source(int n, const WeylTensor& w, const SchoutenJet& jet);

/// Coefficients of psi_4 on the four brackets predicted by layerwise division:
/// -coefficients[i] / triple eigenvalue of the bracket's layer.
std::array<DimRational, 4> psi4_solver_coefficients();
/// The closed forms printed for psi_4 (fourth one without the (n-10)(n-8)
/// factors that layerwise division produces).
std::array<DimRational, 4> psi4_reference_coefficients();

struct Psi4Result {
    int n = 0;
    HomogeneousPoly psi4;
    /// psi4 = sum_i coefficients[i] * bracket_i, read back from the layers.
    std::array<Rational, 4> coefficients;
};

/// Requires n >= 11 (no kernel layers in degree 4). Throws std::invalid_argument
/// otherwise.
Psi4Result solve_psi4(int n, const SourceTerm& source);

/// Coordinates of target in the span of basis, exact. Throws
/// std::invalid_argument if the basis is dependent or target is outside the span.
std::vector<Rational> span_coordinates(const HomogeneousPoly& target, const std::vector<HomogeneousPoly>& basis);

struct LogCoefficientN10 {
    /// psi = ... + raw * |W|^2 r^4 log r with G = r^{-4}(1 + psi).
    Rational raw_over_norm;
    /// Same coefficient times |W|^2 for the given tensor.
    Rational raw;
    /// With G = c_n r^{-4}(1 + psi): c_n * raw_over_norm.
    double cn_over_norm = 0;
    Rational divisor;   // B-combination on r^4 H_0 at n = 10
    Rational f4_h0;     // coefficient of |W|^2 r^4 in the H_0 layer of f4
};

LogCoefficientN10 log_coefficient_n10(const WeylTensor& w, const SchoutenJet& jet);

/// c_n = 1 / (8 (n-2)(n-4)(n-6) omega_{n-1}).
double green_constant(int n);

/// Linear map P_k -> P_{k+2} standing in for the metric-dependent part of the
/// operator.
using DegreeRaisingMap = std::function<HomogeneousPoly(const HomogeneousPoly&)>;

enum class Normalization { unit_leading, paper_leading_cn };

struct ExpansionResult {
    int n = 0;
    int max_order = 0;
    /// psi terms keyed by (degree, log power).
    LogRadialSeries psi_terms{1};
    /// The subset of psi_terms with log power >= 1.
    std::map<std::pair<int, int>, HomogeneousPoly> log_coefficients;
    Normalization normalization = Normalization::unit_leading;
    /// triple(psi) + K(psi) + f. Terms above max_order are what the truncation
    /// leaves behind.
    LogRadialSeries residual{1};

    /// True when the residual has no term of degree <= max_order.
    bool residual_clear() const {
        for (const auto& [key, poly] : residual.terms()) {
            if (key.first <= max_order) return false;
        }
        return true;
    }
};

/// Degree-by-degree solve of A_{2-n}A_{4-n}A_{6-n} psi + K psi + f = 0 through
/// max_order. K acts on each log-power coefficient separately.
ExpansionResult expand(int n, const std::map<int, HomogeneousPoly>& source, const DegreeRaisingMap& k, int max_order);

DegreeRaisingMap zero_map(int n);

} // namespace gjms6
