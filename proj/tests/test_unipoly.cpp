#include <gtest/gtest.h>

#include "symtensor/unipoly.hpp"

using symtensor::Rational;
using symtensor::UniPoly;

namespace {

const UniPoly kLambda = UniPoly::variable();

UniPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) {
        c.emplace_back(v);
    }
    return UniPoly(c);
}

}  // namespace

TEST(UniPoly, TrimsAndReportsDegree) {
    EXPECT_EQ(UniPoly().degree(), UniPoly::kZeroDegree);
    EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
    EXPECT_TRUE(poly({0, 0}).is_zero());
}

TEST(UniPoly, RendersDescendingPowers) {
    EXPECT_EQ((Rational(-8) * pow(kLambda, 6) + Rational(64) * pow(kLambda, 4)).to_string(), "-8λ^6 + 64λ^4");
    EXPECT_EQ(poly({16, 0, -48, 0, 48, 0, -16}).to_string(), "-16λ^6 + 48λ^4 - 48λ^2 + 16");
    EXPECT_EQ(UniPoly().to_string(), "0");
    EXPECT_EQ((kLambda - UniPoly(1)).to_string("t"), "t - 1");
}

TEST(UniPoly, ArithmeticAndEvaluation) {
    const UniPoly p = kLambda * kLambda - UniPoly(1);
    EXPECT_EQ(p, (kLambda - UniPoly(1)) * (kLambda + UniPoly(1)));
    EXPECT_EQ(p.evaluate(Rational(3)), Rational(8));
    EXPECT_DOUBLE_EQ(p.evaluate(0.5), -0.75);
    EXPECT_EQ(p.derivative(), Rational(2) * kLambda);
    EXPECT_EQ((Rational(2) * p).monic(), p);
}

TEST(UniPoly, DivisionWithRemainder) {
    const UniPoly a = pow(kLambda, 3) + Rational(2) * kLambda + UniPoly(5);
    const UniPoly b = kLambda * kLambda - UniPoly(1);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_THROW(divmod(a, UniPoly()), std::domain_error);
}

TEST(UniPoly, GcdIsMonic) {
    const UniPoly common = kLambda - UniPoly(Rational::parse("1/2"));
    const UniPoly a = Rational(6) * common * (kLambda + UniPoly(3));
    const UniPoly b = Rational(-4) * common * pow(kLambda, 2);
    EXPECT_EQ(gcd(a, b), common);
    EXPECT_EQ(gcd(UniPoly(), UniPoly()), UniPoly());
}

TEST(UniPoly, SquareFreeDecompositionOfCubedFactor) {
    // -16 (λ^2 - 1)^3 (λ - 2)
    const UniPoly base = kLambda * kLambda - UniPoly(1);
    const UniPoly p = Rational(-16) * pow(base, 3) * (kLambda - UniPoly(2));
    const auto sf = square_free_decomposition(p);
    EXPECT_EQ(sf.content, Rational(-16));
    ASSERT_EQ(sf.factors.size(), 3u);
    EXPECT_EQ(sf.factors[0], kLambda - UniPoly(2));
    EXPECT_EQ(sf.factors[1], UniPoly(1));
    EXPECT_EQ(sf.factors[2], base);
    UniPoly rebuilt(sf.content);
    for (std::size_t i = 0; i < sf.factors.size(); ++i) {
        rebuilt *= pow(sf.factors[i], static_cast<unsigned>(i + 1));
    }
    EXPECT_EQ(rebuilt, p);
}

TEST(UniPoly, EvenPartInSquare) {
    const UniPoly p = poly({16, 0, -48, 0, 48, 0, -16});
    ASSERT_TRUE(p.is_even());
    EXPECT_EQ(p.even_part_in_square(), poly({16, -48, 48, -16}));
    EXPECT_FALSE(kLambda.is_even());
}

TEST(UniPoly, ScaleVariable) {
    const UniPoly p = kLambda * kLambda + kLambda;
    EXPECT_EQ(p.scale_variable(Rational(2)), Rational(4) * kLambda * kLambda + Rational(2) * kLambda);
}

TEST(UniPoly, PrimitiveIntegerCoefficients) {
    const UniPoly p = UniPoly({Rational::parse("1/2"), Rational::parse("-3/4"), Rational(1)});
    const auto ints = symtensor::primitive_integer_coefficients(p);
    ASSERT_EQ(ints.size(), 3u);
    EXPECT_EQ(ints[0], 2);
    EXPECT_EQ(ints[1], -3);
    EXPECT_EQ(ints[2], 4);
}
