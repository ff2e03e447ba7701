#include "symtensor/matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace symtensor {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("matrix entry count does not match shape");
    }
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Rational RationalMatrix::trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix shape mismatch in addition");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix shape mismatch in subtraction");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
    for (auto& e : entries_) {
        e *= scalar;
    }
    return *this;
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix shape mismatch in product");
    }
    RationalMatrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Rational& a = lhs(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

RationalVector operator*(const RationalMatrix& lhs, const RationalVector& rhs) {
    if (lhs.cols_ != rhs.size()) {
        throw std::invalid_argument("matrix-vector shape mismatch");
    }
    RationalVector out(lhs.rows_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            out[i] += lhs(i, k) * rhs[k];
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r == 0 ? "[" : ", [");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            os << (c == 0 ? "" : ", ") << m(r, c);
        }
        os << "]";
    }
    return os << "]";
}

RowEchelon row_echelon(const RationalMatrix& m) {
    RowEchelon out{m, {}};
    RationalMatrix& a = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        if (pivot != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                std::swap(a(row, c), a(pivot, c));
            }
        }
        const Rational inv = a(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) {
            a(row, c) *= inv;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) {
                continue;
            }
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                a(r, c) -= factor * a(row, c);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const RationalMatrix& m) { return row_echelon(m).pivots.size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
    const RowEchelon ech = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RationalVector v(m.cols());
        v[free] = Rational(1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            v[ech.pivots[r]] = -ech.reduced(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(col, c), a(pivot, c));
            }
            det = -det;
        }
        det *= a(col, col);
        const Rational inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) {
                continue;
            }
            const Rational factor = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
            }
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.is_square()) {
        throw std::invalid_argument("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, n + r) = Rational(1);
    }
    const RowEchelon ech = row_echelon(aug);
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
        throw std::domain_error("matrix is singular");
    }
    RationalMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = ech.reduced(r, n + c);
        }
    }
    return inv;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<UniPoly>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

namespace {

// Determinant of the minor formed by rows [row, n) and the columns not in `used`.
UniPoly laplace(const PolyMatrix& m, std::size_t row, unsigned used,
                std::unordered_map<unsigned, UniPoly>& memo) {
    const std::size_t n = m.rows();
    if (row == n) {
        return UniPoly(1);
    }
    if (auto it = memo.find(used); it != memo.end()) {
        return it->second;
    }
    UniPoly acc;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        if ((used >> col) & 1U) {
            continue;
        }
        const UniPoly& entry = m(row, col);
        if (!entry.is_zero()) {
            UniPoly term = entry * laplace(m, row + 1, used | (1U << col), memo);
            if (sign > 0) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
}

}  // namespace

UniPoly det_poly(const PolyMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("det_poly: matrix is not square");
    }
    if (m.rows() > kMaxDetPolySide) {
        throw std::invalid_argument("det_poly: side exceeds supported maximum");
    }
    std::unordered_map<unsigned, UniPoly> memo;
    return laplace(m, 0, 0U, memo);
}

}  // namespace symtensor
