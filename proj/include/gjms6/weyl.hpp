#pragma once

#include <gjms6/homogeneous_poly.hpp>
#include <gjms6/rational.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gjms6 {

/// Algebraic Weyl tensor at a point. Entries are stored once per unordered pair
/// of antisymmetric index pairs; the remaining entries follow from
/// W_ijkl = -W_jikl = -W_ijlk = W_klij.
class WeylTensor {
public:
    /// Builds the tensor from any function with the pair symmetries. Only
    /// representatives with i<j, k<l are sampled.
    static WeylTensor from_function(int n, const std::function<Rational(int, int, int, int)>& w);

    int dim() const { return n_; }
    Rational operator()(int i, int j, int k, int l) const;
    bool is_zero() const;

    /// Entries scaled to integers: returns D and fills z with D*W_ijkl in
    /// row-major order over (i,j,k,l).
    Integer integer_entries(std::vector<Integer>& z) const;

private:
    WeylTensor(int n);
    int pair_index(int i, int j) const;

    int n_;
    int pairs_;
    std::vector<Rational> reduced_;
};

/// Deterministic pseudo-random nonzero Weyl tensor: a random integer rank-4
/// array is projected onto the algebraic curvature tensors and then onto the
/// trace-free part. Throws std::invalid_argument for n < 4.
WeylTensor random_weyl(int n, std::uint64_t seed);

/// Checks antisymmetry, pair symmetry, first Bianchi and tracelessness.
/// On failure returns false and describes the first violation in `why`.
bool check_weyl_invariants(const WeylTensor& w, std::string* why = nullptr);

Rational norm_sq(const WeylTensor& w);

/// sum_{k,l} (W_iklj x^i x^j)^2
HomogeneousPoly quartic_form(const WeylTensor& w);
/// sum_{k,l,s} ((W_ikls + W_ilks) x^i)^2
HomogeneousPoly vector_form(const WeylTensor& w);

struct ContractionSums {
    Rational pair_sum_sq;   // sum (W_ikls + W_ilks)^2
    Rational cross;         // sum W_iklj W_jkli
    Rational norm_sq;
};
ContractionSums contraction_sums(const WeylTensor& w);

/// Second derivatives of sigma_1 of the Schouten tensor at the point together
/// with |W|^2 there; the trace of hess is -|W|^2/(12(n-1)).
struct SchoutenJet {
    std::vector<std::vector<Rational>> hess;
    Rational w_norm_sq;
};

SchoutenJet random_schouten_jet(const WeylTensor& w, std::uint64_t seed);
/// Zero Hessian with the given norm; only valid as a jet when w_norm_sq is 0.
SchoutenJet zero_jet(int n);
bool check_jet(const SchoutenJet& jet, std::string* why = nullptr);

/// sigma_1(A)_{,ij} x^i x^j
HomogeneousPoly hess_form(const SchoutenJet& jet);

/// The bracketed harmonic pieces of the degree-four source. bracket2 and
/// bracket3 are r^2 times the harmonic quadratics harmonic2 and harmonic3.
struct BracketPolynomials {
    HomogeneousPoly bracket1;
    HomogeneousPoly bracket2;
    HomogeneousPoly bracket3;
    HomogeneousPoly tail;
    HomogeneousPoly harmonic2;
    HomogeneousPoly harmonic3;
};

/// Throws InvariantViolation if any bracket fails to be harmonic.
BracketPolynomials bracket_polynomials(const WeylTensor& w, const SchoutenJet& jet);

/// B_ij x^i x^j at the point in closed form.
HomogeneousPoly bach_quadratic(const WeylTensor& w, const SchoutenJet& jet);

/// A_{kl,ij} x^i x^j x^k x^l = -2/(9(n-2)) Q - hess_form r^2/(n-2).
HomogeneousPoly schouten_quartic(const WeylTensor& w, const SchoutenJet& jet);
/// (Delta A_ij) x^i x^j obtained from the quartic by the Laplacian chain.
HomogeneousPoly laplacian_schouten_quadratic(const WeylTensor& w, const SchoutenJet& jet);
/// (T_4)_ij x^i x^j = (n-6) Delta sigma_1 r^2 - 16/(n-4) B_ij x^i x^j.
HomogeneousPoly t4_quadratic(const WeylTensor& w, const SchoutenJet& jet);

} // namespace gjms6
