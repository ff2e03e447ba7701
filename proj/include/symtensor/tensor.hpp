#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symtensor/matrix.hpp"
#include "symtensor/rational.hpp"

namespace symtensor {

/// Sorted, 1-based index triple (i <= j <= k).
using Index3 = std::array<unsigned, 3>;

/// Sorts an arbitrary index triple.
Index3 sorted_index(unsigned i, unsigned j, unsigned k);

/// Number of distinct orderings of a sorted triple: 1, 3 or 6.
unsigned permutation_count(const Index3& idx);

/// Order-3 symmetric tensor of dimension n.
///
/// Only sorted index triples are stored, so symmetry holds by construction;
/// an absent triple is zero and zero values are never stored.
template <class Scalar>
class BasicSymTensor3 {
public:
    using Entries = std::map<Index3, Scalar>;

    BasicSymTensor3() = default;
    explicit BasicSymTensor3(unsigned dim);

    unsigned dim() const { return dim_; }
    const Entries& entries() const { return entries_; }

    /// Entry at any index order (1-based). Throws std::out_of_range.
    Scalar at(unsigned i, unsigned j, unsigned k) const;
    /// Sets the entry for all orderings of (i, j, k). Zero erases.
    void set(unsigned i, unsigned j, unsigned k, Scalar value);

    /// Contraction (A x^2)_i = sum_{j,k} a_ijk x_j x_k, in long double.
    std::vector<long double> contract(const std::vector<long double>& x) const;

    /// Full dense n^3 array, row-major over 0-based (i, j, k).
    std::vector<Scalar> dense() const;
    static BasicSymTensor3 from_dense(unsigned dim, const std::vector<Scalar>& values);

    friend bool operator==(const BasicSymTensor3& lhs, const BasicSymTensor3& rhs) = default;

private:
    void check(unsigned i, unsigned j, unsigned k) const;

    unsigned dim_ = 0;
    Entries entries_;
};

using SymTensor3 = BasicSymTensor3<Rational>;
using RealSymTensor3 = BasicSymTensor3<double>;

extern template class BasicSymTensor3<Rational>;
extern template class BasicSymTensor3<double>;

RealSymTensor3 to_real(const SymTensor3& tensor);

/// f = a x^3 + 3b x^2 y + 3c x y^2 + d y^3, i.e. a111=a, a112=b, a122=c, a222=d.
struct BinaryCubic {
    Rational a;
    Rational b;
    Rational c;
    Rational d;

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

    /// Parses "a,b,c,d" with each field an exact rational.
    static BinaryCubic parse(std::string_view text);
    /// "a,b,c,d"
    std::string to_string() const;

    friend bool operator==(const BinaryCubic&, const BinaryCubic&) = default;
};

/// Homogeneous polynomial in n variables keyed by exponent vectors.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    Polynomial() = default;
    explicit Polynomial(unsigned num_vars) : num_vars_(num_vars) {}

    unsigned num_vars() const { return num_vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    /// Adds c to the coefficient of the monomial with the given exponents.
    void add_term(const Exponents& exponents, const Rational& c);
    Rational coefficient(const Exponents& exponents) const;

    bool is_zero() const { return terms_.empty(); }
    /// True when every term has total degree `degree` (the zero polynomial qualifies).
    bool is_homogeneous(unsigned degree) const;
    /// Partial derivative with respect to variable `var` (0-based).
    Polynomial derivative(unsigned var) const;

    /// e.g. "x1^3 - 3*x1*x2^2"; two-variable polynomials use x, y and
    /// three-variable ones x, y, z.
    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    unsigned num_vars_ = 0;
    std::map<Exponents, Rational> terms_;
};

/// Invertible n x n matrix P for the substitution g(x) = f(Px).
///
/// Exact when built from a RationalMatrix; otherwise a floating-point
/// matrix. The numeric view is always available.
class ChangeOfVariables {
public:
    static constexpr double kSingularTolerance = 1e-9;

    /// Throws std::domain_error when singular.
    explicit ChangeOfVariables(RationalMatrix exact);
    /// Throws std::domain_error when |det| < kSingularTolerance.
    ChangeOfVariables(unsigned dim, std::vector<double> row_major);

    static ChangeOfVariables identity(unsigned dim);

    unsigned dim() const { return dim_; }
    bool is_exact() const { return exact_; }
    /// Throws std::logic_error when not exact.
    const RationalMatrix& exact_matrix() const;
    double operator()(unsigned r, unsigned c) const { return numeric_[r * dim_ + c]; }
    const std::vector<double>& numeric() const { return numeric_; }

    /// Matrix product (this · rhs); exact only if both factors are.
    ChangeOfVariables compose(const ChangeOfVariables& rhs) const;

private:
    ChangeOfVariables() = default;

    unsigned dim_ = 0;
    bool exact_ = false;
    RationalMatrix exact_matrix_;
    std::vector<double> numeric_;
};

SymTensor3 cubic_to_tensor(const BinaryCubic& f);
/// Requires dim 2. Throws std::invalid_argument otherwise.
BinaryCubic tensor_to_cubic(const SymTensor3& tensor);

/// f(x) = sum over all index triples of a_ijk x_i x_j x_k.
Polynomial tensor_to_poly(const SymTensor3& tensor);
/// Inverse of tensor_to_poly. Throws std::invalid_argument when the
/// polynomial is not a homogeneous cubic.
SymTensor3 poly_to_tensor(const Polynomial& f);

/// Tensor of g(x) = f(Px): B_{j1 j2 j3} = sum a_{i1 i2 i3} p_{i1 j1} p_{i2 j2} p_{i3 j3}.
/// Throws std::invalid_argument on dimension mismatch, std::domain_error when P is singular.
SymTensor3 apply_change(const SymTensor3& tensor, const RationalMatrix& p);
/// Same transform with a possibly inexact P, evaluated in floating point.
RealSymTensor3 apply_change(const SymTensor3& tensor, const ChangeOfVariables& p);

/// B ⊕ I_(k): B in the leading block, a_iii = 1 on the k appended coordinates.
SymTensor3 direct_sum(const SymTensor3& block, unsigned k);

/// Unit tensor I_(n).
SymTensor3 unit_tensor(unsigned n);

}  // namespace symtensor
