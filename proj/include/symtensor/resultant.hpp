#pragma once

#include <array>
#include <optional>

#include "symtensor/matrix.hpp"
#include "symtensor/tensor.hpp"
#include "symtensor/unipoly.hpp"

namespace symtensor {

/// Three bivariate quadratics F1, F2, F3 with coefficients in Q[λ], each row
/// ordered by the monomials (x^2, xy, y^2, x, y, 1).
struct QuadraticTriple {
    std::array<std::array<UniPoly, 6>, 3> rows;
};

/// τ_ijk: determinant of coefficient columns i, j, k (1-based, in that order).
/// Throws std::invalid_argument on out-of-range or repeated indices.
UniPoly tau(const QuadraticTriple& t, unsigned i, unsigned j, unsigned k);

/// 6x6 matrix: rows 1-3 are F1..F3, rows 4-6 the derived quadratics
///   F4 = (τ124, τ125+τ134, τ135, τ126, τ136, 0)
///   F5 = (0, -τ136, -τ236, -τ156, τ346-τ256, -τ456)
///   F6 = (τ314, τ315+τ324, τ325, τ316, τ326, 0)
PolyMatrix combination_matrix(const QuadraticTriple& t);

/// det(combination_matrix(t)); vanishes when the triple has a common zero.
UniPoly combination_resultant(const QuadraticTriple& t);

/// System of the Z-eigenvalue problem for a 2x2x2 tensor with the
/// normalization x^2 + y^2 = 1 - j λ^2 (j = 0 is the plain problem):
///   (a, 2b, c, -λ, 0, 0), (b, 2c, d, 0, -λ, 0), (1, 0, 1, 0, 0, jλ^2 - 1)
QuadraticTriple eigenvalue_system(const BinaryCubic& f, unsigned j = 0);

/// Characteristic polynomial Ψ(λ) = α2 λ^6 + α4 λ^4 + α6 λ^2 + α8.
struct CharPoly {
    UniPoly poly;
    /// (α2, α4, α6, α8)
    std::array<Rational, 4> alpha;
    /// Set when the polynomial vanishes identically.
    bool degenerate = false;
};

/// Ψ by the combination-resultant determinant of eigenvalue_system(f).
/// Throws std::logic_error if the result has an odd-power term.
CharPoly charpoly_det(const BinaryCubic& f);

/// Ψ from the closed-form polynomial coefficients α2..α8 in (a, b, c, d).
CharPoly charpoly_closed_form(const BinaryCubic& f);

/// Combination resultant of eigenvalue_system(f, j).
UniPoly reduced_charpoly(const BinaryCubic& f, unsigned j);

}  // namespace symtensor
