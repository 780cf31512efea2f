#pragma once

#include <gjms6/dim_rational.hpp>

namespace gjms6 {

/// Beta arguments are written in half-steps from n/2: offset a means n/2 + a/2.
/// The reference value is B(n/2+1, n/2-5), i.e. offsets (2, -10).
inline constexpr int kReferenceAlpha = 2;
inline constexpr int kReferenceBeta = -10;

struct BetaRatio {
    int alpha_offset = 0;
    int beta_offset = 0;
    DimRational relative_to_reference;
};

/// Gamma((c*n + d1)/2) / Gamma((c*n + d2)/2) as a rational function of n.
/// Throws InexactBetaRatio when d1 - d2 is odd.
DimRational gamma_ratio(int c, int d1, int d2);

/// B(n/2 + a1/2, n/2 + b1/2) / B(n/2 + a2/2, n/2 + b2/2).
/// Throws InexactBetaRatio unless a1-a2 and b1-b2 are both even.
DimRational beta_ratio(int a1, int b1, int a2, int b2);

/// B(n/2 + a/2, n/2 + b/2) expressed against the reference value.
BetaRatio beta_relative(int alpha_offset, int beta_offset);

} // namespace gjms6
