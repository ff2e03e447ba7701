#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "symtensor/rational.hpp"

namespace symtensor {

/// Dense univariate polynomial over the rationals; coefficient index = degree.
///
/// The coefficient vector is kept trimmed, so the leading coefficient is
/// nonzero unless the polynomial is zero (empty vector, degree() == -1).
class UniPoly {
public:
    static constexpr int kZeroDegree = -1;

    UniPoly() = default;
    UniPoly(Rational constant);  // NOLINT(google-explicit-constructor)
    UniPoly(int constant) : UniPoly(Rational(constant)) {}  // NOLINT
    explicit UniPoly(std::vector<Rational> coefficients);

    /// c·λ^power
    static UniPoly monomial(const Rational& c, unsigned power);
    /// The indeterminate λ.
    static UniPoly variable() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of λ^power; zero beyond the degree.
    Rational coeff(unsigned power) const;
    Rational leading() const;

    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;
    long double evaluate(long double x) const;
    UniPoly derivative() const;
    /// Divides by the leading coefficient; zero stays zero.
    UniPoly monic() const;
    /// Substitutes λ -> scale·λ.
    UniPoly scale_variable(const Rational& scale) const;
    /// True when every odd-power coefficient vanishes.
    bool is_even() const;
    /// For an even polynomial p(λ) returns q with p(λ) = q(λ²).
    UniPoly even_part_in_square() const;

    /// Renders in descending powers, e.g. "-8λ^6 + 64λ^4"; "0" for zero.
    std::string to_string(const std::string& var = "λ") const;

    UniPoly& operator+=(const UniPoly& other);
    UniPoly& operator-=(const UniPoly& other);
    UniPoly& operator*=(const UniPoly& other);
    UniPoly& operator*=(const Rational& scalar);

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
    friend UniPoly operator*(UniPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend UniPoly operator*(const Rational& lhs, UniPoly rhs) { return rhs *= lhs; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

UniPoly pow(const UniPoly& base, unsigned exponent);

/// Euclidean division over Q: returns (quotient, remainder).
/// Throws std::domain_error when the divisor is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor);

/// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& lhs, const UniPoly& rhs);

/// Yun square-free decomposition: p = content · Π factors[i]^(i+1), every
/// factor monic and square-free, pairwise coprime. Trailing unit factors
/// are dropped. Throws on the zero polynomial.
struct SquareFreeDecomposition {
    Rational content;
    std::vector<UniPoly> factors;
};
SquareFreeDecomposition square_free_decomposition(const UniPoly& p);

/// Scales p by a positive rational so all coefficients are integers with gcd 1.
std::vector<mpz_class> primitive_integer_coefficients(const UniPoly& p);

}  // namespace symtensor
