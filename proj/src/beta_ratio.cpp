#include <gjms6/beta_ratio.hpp>
#include <gjms6/errors.hpp>

#include <string>

namespace gjms6 {

namespace {

// (c*n + d)/2 as a DimRational.
DimRational half_arg(int c, int d) {
    return (DimRational(c) * DimRational::n() + DimRational(d)) / DimRational(2);
}

} // namespace

DimRational gamma_ratio(int c, int d1, int d2) {
    if ((d1 - d2) % 2 != 0) {
        throw InexactBetaRatio("Gamma arguments differ by a half-integer (offsets " +
                               std::to_string(d1) + " and " + std::to_string(d2) + ")");
    }
    // Gamma(x + k)/Gamma(x) = x (x+1) ... (x+k-1).
    const int k = (d1 - d2) / 2;
    const int base = k >= 0 ? d2 : d1;
    DimRational prod(1);
    const int steps = k >= 0 ? k : -k;
    for (int j = 0; j < steps; ++j) prod *= half_arg(c, base + 2 * j);
    return k >= 0 ? prod : DimRational(1) / prod;
}

DimRational beta_ratio(int a1, int b1, int a2, int b2) {
    if ((a1 - a2) % 2 != 0 || (b1 - b2) % 2 != 0) {
        throw InexactBetaRatio("Beta arguments do not differ by integers");
    }
    return gamma_ratio(1, a1, a2) * gamma_ratio(1, b1, b2) / gamma_ratio(2, a1 + b1, a2 + b2);
}

BetaRatio beta_relative(int alpha_offset, int beta_offset) {
    return {alpha_offset, beta_offset,
            beta_ratio(alpha_offset, beta_offset, kReferenceAlpha, kReferenceBeta)};
}

} // namespace gjms6
