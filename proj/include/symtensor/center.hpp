#pragma once

#include <string>
#include <vector>

#include "symtensor/errors.hpp"
#include "symtensor/matrix.hpp"
#include "symtensor/tensor.hpp"

namespace symtensor {

/// Harrison center Z(f) = { X : (H_f X)^T = H_f X } of a homogeneous cubic.
struct CenterAlgebra {
    unsigned n = 0;                      // ambient matrix size
    std::vector<RationalMatrix> basis;   // linearly independent n x n matrices

    std::size_t dimension() const { return basis.size(); }
};

enum class AlgebraFactor { C, DualNumbers, R };

enum class AlgebraTag { RxR, C, DualNumbers, ProductList };

/// Isomorphism class of a center algebra.
///
/// Two classes compare equal when their normalized factor multisets agree,
/// so RxR and ProductList{R, R} are the same class.
struct AlgebraClass {
    AlgebraTag tag = AlgebraTag::ProductList;
    std::vector<AlgebraFactor> factors;  // ProductList only, kept sorted

    static AlgebraClass product(std::vector<AlgebraFactor> factors);

    /// Factors after splitting RxR into R, R; sorted.
    std::vector<AlgebraFactor> normalized_factors() const;
    /// "RxR", "C", "DualNumbers", or factors joined by "×", e.g. "C×R".
    std::string to_string() const;

    friend bool operator==(const AlgebraClass& lhs, const AlgebraClass& rhs) {
        return lhs.normalized_factors() == rhs.normalized_factors();
    }
};

enum class CanonicalClass { Zero, SingleCube, Fermat, TraceForm, Degenerate2 };

std::string to_string(CanonicalClass cls);
std::string to_string(AlgebraFactor factor);

/// Representatives 0, x^3, x^3 + y^3, x^3 - 3xy^2, 3x^2 y.
BinaryCubic canonical_representative(CanonicalClass cls);

/// Hessian of f as a matrix of polynomials (linear forms for a cubic).
std::vector<std::vector<Polynomial>> hessian(const Polynomial& f);

/// Exact kernel of the linear system (H_f X)^T = H_f X, matched coefficient
/// by coefficient in each variable. Unknowns X_ij are ordered row-major.
/// Throws std::invalid_argument unless f is a homogeneous cubic.
CenterAlgebra center(const Polynomial& f);
CenterAlgebra center(const SymTensor3& tensor);
CenterAlgebra center(const BinaryCubic& f);

/// The linear system whose kernel is Z(f): rows of coefficients on X_ij.
RationalMatrix center_system(const Polynomial& f);

/// Exact membership of X in the span of the center basis.
bool in_span(const CenterAlgebra& z, const RationalMatrix& x);

/// For n = 2 and dimension 2: sign of tr(X)^2 - 4 det(X) on the first basis
/// element not proportional to the identity. Otherwise the center must split
/// into coordinate blocks of size 1 (factor R) or size 2 with a
/// 2-dimensional projection, giving a ProductList.
/// Throws UnsupportedStructure for anything else.
AlgebraClass classify_algebra(const CenterAlgebra& z);

CanonicalClass classify_cubic(const BinaryCubic& f);

struct CanonicalTransform {
    CanonicalClass cls;
    ChangeOfVariables transform;  // f(P x) is the canonical representative
};

/// Constructs P with f(Px) equal to the canonical representative, exactly
/// when every radical involved is rational. Throws std::invalid_argument on
/// the zero cubic.
CanonicalTransform canonical_transform(const BinaryCubic& f);

bool are_equivalent(const BinaryCubic& f, const BinaryCubic& g);

struct DirectSumCenter {
    CenterAlgebra algebra;
    AlgebraClass cls;
};

/// Center of f_B + x_3^3 + ... + x_{k+2}^3. Throws DegenerateInput when
/// dim Z(B) != 2.
DirectSumCenter center_of_direct_sum(const BinaryCubic& block, unsigned k);

}  // namespace symtensor
