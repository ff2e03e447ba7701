#include "symtensor/resultant.hpp"

#include <stdexcept>

namespace symtensor {

UniPoly tau(const QuadraticTriple& t, unsigned i, unsigned j, unsigned k) {
    if (i < 1 || j < 1 || k < 1 || i > 6 || j > 6 || k > 6) {
        throw std::invalid_argument("tau index out of range 1..6");
    }
    if (i == j || j == k || k == i) {
        throw std::invalid_argument("tau indices must be pairwise distinct");
    }
    const auto& r = t.rows;
    const auto m = [&](unsigned row, unsigned col) -> const UniPoly& { return r[row][col - 1]; };
    return m(0, i) * (m(1, j) * m(2, k) - m(1, k) * m(2, j)) -
           m(0, j) * (m(1, i) * m(2, k) - m(1, k) * m(2, i)) +
           m(0, k) * (m(1, i) * m(2, j) - m(1, j) * m(2, i));
}

PolyMatrix combination_matrix(const QuadraticTriple& t) {
    PolyMatrix c(6, 6);
    for (std::size_t row = 0; row < 3; ++row) {
        for (std::size_t col = 0; col < 6; ++col) {
            c(row, col) = t.rows[row][col];
        }
    }
    const auto T = [&t](unsigned i, unsigned j, unsigned k) { return tau(t, i, j, k); };
    const std::array<UniPoly, 6> f4 = {T(1, 2, 4), T(1, 2, 5) + T(1, 3, 4), T(1, 3, 5),
                                       T(1, 2, 6), T(1, 3, 6), UniPoly()};
    const std::array<UniPoly, 6> f5 = {UniPoly(), -T(1, 3, 6), -T(2, 3, 6),
                                       -T(1, 5, 6), T(3, 4, 6) - T(2, 5, 6), -T(4, 5, 6)};
    const std::array<UniPoly, 6> f6 = {T(3, 1, 4), T(3, 1, 5) + T(3, 2, 4), T(3, 2, 5),
                                       T(3, 1, 6), T(3, 2, 6), UniPoly()};
    for (std::size_t col = 0; col < 6; ++col) {
        c(3, col) = f4[col];
        c(4, col) = f5[col];
        c(5, col) = f6[col];
    }
    return c;
}

UniPoly combination_resultant(const QuadraticTriple& t) { return det_poly(combination_matrix(t)); }

QuadraticTriple eigenvalue_system(const BinaryCubic& f, unsigned j) {
    const UniPoly lambda = UniPoly::variable();
    const UniPoly zero;
    QuadraticTriple t;
    t.rows[0] = {f.a, Rational(2) * f.b, f.c, -lambda, zero, zero};
    t.rows[1] = {f.b, Rational(2) * f.c, f.d, zero, -lambda, zero};
    t.rows[2] = {Rational(1), zero, Rational(1), zero, zero,
                 UniPoly::monomial(Rational(static_cast<long>(j)), 2) - UniPoly(1)};
    return t;
}

namespace {

CharPoly from_poly(UniPoly poly) {
    if (!poly.is_even()) {
        throw std::logic_error("characteristic polynomial has odd-power terms: " + poly.to_string());
    }
    CharPoly out;
    out.alpha = {poly.coeff(6), poly.coeff(4), poly.coeff(2), poly.coeff(0)};
    out.degenerate = poly.is_zero();
    out.poly = std::move(poly);
    return out;
}

}  // namespace

CharPoly charpoly_det(const BinaryCubic& f) {
    CharPoly out = from_poly(combination_resultant(eigenvalue_system(f, 0)));
    if (out.poly.degree() > 6) {
        throw std::logic_error("characteristic polynomial exceeds degree 6");
    }
    return out;
}

CharPoly charpoly_closed_form(const BinaryCubic& f) {
    const Rational& a = f.a;
    const Rational& b = f.b;
    const Rational& c = f.c;
    const Rational& d = f.d;
    const auto P = [](const Rational& x, unsigned e) { return pow(x, e); };
    const Rational n = Rational(-1);

    const Rational u = -a + Rational(3) * c;
    const Rational v = Rational(3) * b - d;
    const Rational alpha2 = n * u * u - v * v;

    const Rational alpha4 =
        P(a, 4) + Rational(24) * P(b, 4) - Rational(6) * P(a, 3) * c + Rational(24) * P(c, 4) -
        Rational(8) * P(b, 3) * d + Rational(12) * P(c, 2) * P(d, 2) + P(d, 4) +
        Rational(9) * P(b, 2) * (Rational(5) * P(c, 2) + P(d, 2)) +
        Rational(3) * P(a, 2) * (Rational(4) * P(b, 2) + Rational(3) * P(c, 2) - Rational(2) * b * d + P(d, 2)) -
        Rational(2) * a * c * (Rational(6) * P(b, 2) + Rational(4) * P(c, 2) + Rational(6) * b * d + Rational(3) * P(d, 2)) -
        Rational(6) * b * (Rational(2) * P(c, 2) * d + P(d, 3));

    const Rational alpha6 =
        Rational(-2) * P(a, 4) * P(d, 2) + Rational(12) * P(a, 3) * b * c * d + Rational(8) * P(a, 3) * P(c, 3) +
        Rational(6) * P(a, 3) * c * P(d, 2) - Rational(8) * P(a, 2) * P(b, 3) * d -
        Rational(42) * P(a, 2) * P(b, 2) * P(c, 2) - Rational(12) * P(a, 2) * P(b, 2) * P(d, 2) +
        Rational(12) * P(a, 2) * b * P(c, 2) * d + Rational(6) * P(a, 2) * b * P(d, 3) -
        Rational(24) * P(a, 2) * P(c, 4) - Rational(12) * P(a, 2) * P(c, 2) * P(d, 2) -
        Rational(2) * P(a, 2) * P(d, 4) + Rational(48) * a * P(b, 4) * c + Rational(30) * a * P(b, 2) * P(c, 3) +
        Rational(12) * a * P(b, 2) * c * P(d, 2) + Rational(12) * a * b * c * P(d, 3) -
        Rational(8) * a * P(c, 3) * P(d, 2) - Rational(16) * P(b, 6) - Rational(12) * P(b, 4) * P(c, 2) -
        Rational(24) * P(b, 4) * P(d, 2) + Rational(30) * P(b, 3) * P(c, 2) * d + Rational(8) * P(b, 3) * P(d, 3) -
        Rational(12) * P(b, 2) * P(c, 4) - Rational(42) * P(b, 2) * P(c, 2) * P(d, 2) +
        Rational(48) * b * P(c, 4) * d - Rational(16) * P(c, 6);

    const Rational disc = P(a, 2) * P(d, 2) - Rational(6) * a * b * c * d + Rational(4) * a * P(c, 3) +
                          Rational(4) * P(b, 3) * d - Rational(3) * P(b, 2) * P(c, 2);
    const Rational alpha8 = disc * disc;

    CharPoly out;
    out.alpha = {alpha2, alpha4, alpha6, alpha8};
    out.poly = UniPoly(std::vector<Rational>{alpha8, 0, alpha6, 0, alpha4, 0, alpha2});
    out.degenerate = out.poly.is_zero();
    return out;
}

UniPoly reduced_charpoly(const BinaryCubic& f, unsigned j) {
    return combination_resultant(eigenvalue_system(f, j));
}

}  // namespace symtensor
