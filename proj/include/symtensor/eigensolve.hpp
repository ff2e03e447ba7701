#pragma once

#include <optional>
#include <vector>

#include "symtensor/center.hpp"
#include "symtensor/errors.hpp"
#include "symtensor/rational.hpp"
#include "symtensor/roots.hpp"
#include "symtensor/tensor.hpp"

namespace symtensor {

/// A real number known exactly or only as a float.
struct RealValue {
    double value = 0.0;
    std::optional<Rational> exact;

    static RealValue of(const Rational& q) { return {q.to_double(), q}; }
    static RealValue approx(double v) { return {v, std::nullopt}; }
    bool is_exact() const { return exact.has_value(); }
};

/// Tolerance for matching inexact eigenvalue squares.
inline constexpr double kSquareMatchTolerance = 1e-10;
/// Rational snap: within this distance of p/q with q <= kSnapMaxDenominator.
inline constexpr double kSnapTolerance = 1e-11;
inline constexpr long kSnapMaxDenominator = 1000000;

/// Both components of the eigen-system residual.
struct Residual {
    double equation = 0.0;       // max_i |(A x^2)_i - λ x_i|
    double normalization = 0.0;  // |x^T x - 1|
};

/// Throws std::invalid_argument when x has the wrong length.
Residual residual(const SymTensor3& tensor, double lambda, const std::vector<double>& x);

/// Where an eigenpair comes from in the B ⊕ I_(k) case analysis.
struct Branch {
    enum class Kind { Direction, ZeroBlock };
    Kind kind = Kind::Direction;
    /// Appended coordinates equal to λ (1-based, ascending); its size is j.
    std::vector<unsigned> pinned;
    /// Index of the direction-cubic root (Direction only).
    unsigned direction = 0;
    /// Root multiplicity of that direction.
    unsigned multiplicity = 1;
};

struct Eigenpair {
    RealValue lambda;
    std::vector<double> vector;
    Branch branch;
    Residual residual;
};

struct SquareEntry {
    RealValue value;
    unsigned multiplicity = 0;
    /// Set when an inexact value was replaced by a nearby small-denominator rational.
    bool snapped = false;
    /// Root multiplicity of λ^2 in the matching reduced resultants, summed
    /// with branch weights; absent when no resultant is attached.
    std::optional<unsigned> resultant_multiplicity;
};

struct EigenvalueReport {
    unsigned dim = 0;
    /// Sorted by value.
    std::vector<SquareEntry> squares;
    /// Both signs of every eigenpair class.
    std::vector<Eigenpair> pairs;
    unsigned class_count = 0;
    unsigned snap_events = 0;

    unsigned total_square_multiplicity() const;
};

/// Multisets equal: same values (exact, or within kSquareMatchTolerance
/// when either side is inexact) with the same multiplicities.
bool same_squares(const EigenvalueReport& lhs, const EigenvalueReport& rhs);

/// Eigenpairs of f ⊕ I_(j) whose j appended coordinates all equal λ.
///
/// Directions come from the real projective roots of the direction cubic
/// b u^3 + (2c - a) u^2 v + (d - 2b) u v^2 - c v^3; for j >= 1 the branch with
/// zero leading block adds λ^2 = 1/j. Directions with λ = 0 are dropped
/// for j >= 1, since then the appended coordinates vanish.
/// Throws DegenerateInput for the zero cubic.
/// `tol` is the root-refinement tolerance passed to real_roots.
EigenvalueReport eig2d(const BinaryCubic& f, unsigned j = 0, double tol = kDefaultRootTolerance);

/// All eigenpairs of f ⊕ I_(k): union over pinned subsets of size j = 0..k.
EigenvalueReport eig_direct_sum(const BinaryCubic& f, unsigned k, double tol = kDefaultRootTolerance);

/// Eigenpairs of the unit tensor I_(n): x_i = ±1/sqrt(j) on a support of size j.
/// Throws std::invalid_argument when n == 0.
EigenvalueReport eig_unit(unsigned n);

struct CounterexamplePair {
    SymTensor3 t1;
    SymTensor3 t2;
    EigenvalueReport report1;
    EigenvalueReport report2;
    AlgebraClass class1;
    AlgebraClass class2;
    bool verdict = false;  // same eigenvalue squares and different center classes
};

/// T1 = A1 ⊕ I_(n-2), T2 = A2 ⊕ I_(n-2) with A1 = (1, 0, -1, 0), A2 = (1, 0, 1/2, 0).
/// Throws std::invalid_argument when n < 2.
CounterexamplePair build_counterexample(unsigned n);

/// The blocks A1 (which = 1) and A2 (which = 2).
BinaryCubic counterexample_block(int which);

struct UnitDirectSum {
    BinaryCubic block;
    unsigned k = 0;
};

/// Syntactic recognition of B ⊕ I_(k): arbitrary entries inside the leading
/// 2x2x2 block, a_iii = 1 for every i >= 3, and nothing else. Returns nullopt
/// for any other shape (including dimension 1).
std::optional<UnitDirectSum> recognize_unit_direct_sum(const SymTensor3& tensor);

}  // namespace symtensor
