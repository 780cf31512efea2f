#pragma once

#include <stdexcept>
#include <string>

namespace gjms6 {

/// A rational function of n was evaluated where its denominator vanishes.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A ratio of Beta values cannot be reduced to a rational function of n.
struct InexactBetaRatio : std::domain_error {
    using std::domain_error::domain_error;
};

/// Both the triple eigenvalue and its first log-derivative vanish on a layer.
struct UnsupportedDegeneracy : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact identity that must hold by construction failed. Always a bug.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureUnderResolved : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gjms6
