#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "symtensor/rational.hpp"
#include "symtensor/unipoly.hpp"

namespace symtensor {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    /// Nested-list construction, e.g. {{1, 0}, {0, 1}}. Rows must be equal length.
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<Rational>& entries() const { return entries_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    RationalMatrix& operator+=(const RationalMatrix& other);
    RationalMatrix& operator-=(const RationalMatrix& other);
    RationalMatrix& operator*=(const Rational& scalar);
    friend RationalMatrix operator+(RationalMatrix lhs, const RationalMatrix& rhs) { return lhs += rhs; }
    friend RationalMatrix operator-(RationalMatrix lhs, const RationalMatrix& rhs) { return lhs -= rhs; }
    friend RationalMatrix operator*(RationalMatrix lhs, const Rational& rhs) { return lhs *= rhs; }
    friend RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
    friend RationalVector operator*(const RationalMatrix& lhs, const RationalVector& rhs);

    friend bool operator==(const RationalMatrix& lhs, const RationalMatrix& rhs) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Reduced row echelon form with the list of pivot columns.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the exact kernel. One vector per free column, in increasing
/// column order: 1 at the free column, zero at the other free columns,
/// and the negated reduced entries at pivot columns.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Throws std::invalid_argument when not square.
Rational determinant(const RationalMatrix& m);

/// Throws std::invalid_argument when not square, std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Square matrix of polynomials in λ, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols);
    PolyMatrix(std::initializer_list<std::initializer_list<UniPoly>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    UniPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const UniPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const PolyMatrix& lhs, const PolyMatrix& rhs) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<UniPoly> entries_;
};

/// Largest side accepted by det_poly.
inline constexpr std::size_t kMaxDetPolySide = 8;

/// Exact determinant of a polynomial matrix by cofactor (Laplace) expansion
/// along rows, memoized over the set of consumed columns.
/// Throws std::invalid_argument when not square or larger than kMaxDetPolySide.
UniPoly det_poly(const PolyMatrix& m);

}  // namespace symtensor
