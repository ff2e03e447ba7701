#pragma once

#include <optional>
#include <vector>

#include "symtensor/rational.hpp"
#include "symtensor/unipoly.hpp"

namespace symtensor {

inline constexpr double kDefaultRootTolerance = 1e-12;

struct RealRoot {
    double value = 0.0;
    unsigned multiplicity = 0;
    /// Set when the root is rational; then `value` is its rounding.
    std::optional<Rational> exact;

    bool is_exact() const { return exact.has_value(); }
};

/// Sturm sequence of a polynomial: p, p', then negated remainders.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Sign changes of the Sturm sequence evaluated at x (zeros skipped).
int sign_variations(const std::vector<UniPoly>& sequence, const Rational& x);

/// All distinct real roots of p in increasing order, with multiplicities.
///
/// Multiplicities come from the exact square-free decomposition. Each
/// square-free factor's roots are isolated with Sturm sequences; rational
/// roots are found exactly (for a primitive integer factor with leading
/// coefficient l, l·r is an integer), the rest are bisected in exact
/// arithmetic until the interval is below `tol`-scaled width.
/// Throws std::invalid_argument on the zero polynomial.
std::vector<RealRoot> real_roots(const UniPoly& p, double tol = kDefaultRootTolerance);

}  // namespace symtensor
