#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <random>

#include "symtensor/eigensolve.hpp"
#include "symtensor/resultant.hpp"
#include "symtensor/roots.hpp"
#include "test_support.hpp"

using namespace symtensor;

namespace {

const BinaryCubic kA1{1, 0, -1, 0};
const BinaryCubic kA2{1, 0, Rational::parse("1/2"), 0};

std::map<Rational, unsigned> exact_squares(const EigenvalueReport& report) {
    std::map<Rational, unsigned> out;
    for (const auto& s : report.squares) {
        EXPECT_TRUE(s.value.is_exact()) << s.value.value;
        if (s.value.exact) {
            out[*s.value.exact] += s.multiplicity;
        }
    }
    return out;
}

Rational q(const char* text) { return Rational::parse(text); }

void expect_sound(const EigenvalueReport& report) {
    for (const auto& p : report.pairs) {
        EXPECT_EQ(p.vector.size(), report.dim);
        EXPECT_LT(p.residual.equation, 1e-10);
        EXPECT_LT(p.residual.normalization, 1e-12);
        EXPECT_LT(symtensor::testing::unit_norm_error(p.vector), 1e-12);
    }
}

// λ values are closed under negation.
void expect_sign_symmetry(const EigenvalueReport& report) {
    std::multiset<double> values;
    for (const auto& p : report.pairs) {
        values.insert(p.lambda.value);
    }
    std::multiset<double> negated;
    for (double v : values) {
        negated.insert(-v);
    }
    ASSERT_EQ(values.size(), negated.size());
    auto it = negated.begin();
    for (double v : values) {
        EXPECT_NEAR(v, *it, 1e-14);
        ++it;
    }
}

// Count of eigenvector directions of a 2-dim tensor on the half circle,
// from sign changes of (Ax^2)_1 sin θ - (Ax^2)_2 cos θ.
unsigned scanned_directions(const BinaryCubic& f) {
    const SymTensor3 t = cubic_to_tensor(f);
    const auto h = [&](long double theta) {
        const auto ax2 = t.contract({std::cos(theta), std::sin(theta)});
        return ax2[0] * std::sin(theta) - ax2[1] * std::cos(theta);
    };
    const int steps = 200000;
    const long double pi = std::acos(-1.0L);
    const long double offset = 1e-7L;  // keeps θ = 0 inside an open cell
    unsigned changes = 0;
    long double prev = h(offset);
    for (int i = 1; i <= steps; ++i) {
        const long double cur = h(offset + pi * i / steps);
        if ((prev < 0) != (cur < 0)) {
            ++changes;
        }
        prev = cur;
    }
    return changes;
}

}  // namespace

TEST(Residual, Examples) {
    const SymTensor3 i2 = unit_tensor(2);
    EXPECT_EQ(residual(i2, 1.0, {1.0, 0.0}).equation, 0.0);
    const SymTensor3 a1 = cubic_to_tensor(kA1);
    const Residual ok = residual(a1, 1.0, {1.0, 0.0});
    EXPECT_EQ(ok.equation, 0.0);
    EXPECT_EQ(ok.normalization, 0.0);
    EXPECT_DOUBLE_EQ(residual(a1, 2.0, {1.0, 0.0}).equation, 1.0);
    EXPECT_THROW(residual(a1, 1.0, {1.0}), std::invalid_argument);
    EXPECT_NEAR(residual(a1, 1.0, {0.6, 0.8}).normalization, 0.0, 1e-15);
    EXPECT_GT(residual(a1, 1.0, {0.6, 0.8}).equation, 0.1);
}

TEST(Eig2d, A1) {
    const auto report = eig2d(kA1, 0);
    EXPECT_EQ(exact_squares(report), (std::map<Rational, unsigned>{{1, 3}}));
    EXPECT_EQ(report.class_count, 3u);
    EXPECT_EQ(report.pairs.size(), 6u);
    expect_sound(report);
    expect_sign_symmetry(report);
}

TEST(Eig2d, A1WithOnePinnedCoordinate) {
    const auto report = eig2d(kA1, 1);
    EXPECT_EQ(exact_squares(report), (std::map<Rational, unsigned>{{1, 1}, {q("1/2"), 3}}));
    expect_sound(report);
}

TEST(Eig2d, AllOnes) {
    const auto report = eig2d({1, 1, 1, 1}, 0);
    EXPECT_EQ(exact_squares(report), (std::map<Rational, unsigned>{{0, 2}, {8, 1}}));
    expect_sound(report);
    expect_sign_symmetry(report);
}

TEST(Eig2d, A2TripleDirection) {
    const auto report = eig2d(kA2, 0);
    EXPECT_EQ(exact_squares(report), (std::map<Rational, unsigned>{{1, 3}}));
    EXPECT_EQ(report.class_count, 3u);
    expect_sound(report);
}

TEST(Eig2d, PureYDirection) {
    // c = 0 puts a direction root at infinity: x = (0, 1), λ = d.
    const BinaryCubic f{2, 1, 0, 3};
    const auto report = eig2d(f, 0);
    expect_sound(report);
    bool found = false;
    for (const auto& p : report.pairs) {
        if (std::fabs(p.vector[0]) < 1e-15 && p.vector[1] > 0) {
            found = true;
            EXPECT_EQ(p.lambda.exact, Rational(3));
        }
    }
    EXPECT_TRUE(found);
    const auto pinned = eig2d(f, 2);
    expect_sound(pinned);
}

TEST(Eig2d, ZeroCubicIsDegenerate) {
    EXPECT_THROW(eig2d(BinaryCubic{}, 0), DegenerateInput);
    EXPECT_THROW(eig_direct_sum(BinaryCubic{}, 2), DegenerateInput);
}

TEST(Eig2d, RandomCubicsAreSoundAndMatchDirectionScan) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        const BinaryCubic f = symtensor::testing::random_cubic(rng, 30, 7);
        const unsigned j = static_cast<unsigned>(trial % 3);
        const auto report = eig2d(f, j);
        expect_sound(report);
        expect_sign_symmetry(report);
        if (j == 0) {
            // Distinct directions agree with an independent angle scan when all are simple.
            bool simple = true;
            for (const auto& p : report.pairs) {
                simple = simple && p.branch.multiplicity == 1;
            }
            if (simple) {
                EXPECT_EQ(report.pairs.size() / 2, scanned_directions(f)) << f.to_string();
            }
        }
    }
}

TEST(Eig2d, SquaresAreRootsOfReducedResultant) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        const BinaryCubic f = symtensor::testing::random_cubic(rng, 30, 7);
        const unsigned j = static_cast<unsigned>(trial % 3);
        const UniPoly psi = reduced_charpoly(f, j);
        const auto report = eig2d(f, j);
        for (const auto& pair : report.pairs) {
            if (pair.lambda.exact) {
                EXPECT_TRUE(psi.evaluate(*pair.lambda.exact).is_zero()) << f.to_string();
            } else {
                // Relative residual of Ψ at λ.
                const long double l = pair.lambda.value;
                long double scale = 0.0L;
                for (int p = 0; p <= psi.degree(); ++p) {
                    scale += std::fabs(psi.coeff(static_cast<unsigned>(p)).to_long_double()) *
                             std::pow(std::fabs(l), static_cast<long double>(p));
                }
                EXPECT_LT(std::fabs(psi.evaluate(l)) / scale, 1e-10) << f.to_string();
            }
        }
        for (const auto& s : report.squares) {
            ASSERT_TRUE(s.resultant_multiplicity.has_value());
            EXPECT_GE(*s.resultant_multiplicity, 1u) << f.to_string();
        }
    }
}

TEST(Eig2d, ResultantMultiplicityOnExamples) {
    for (const auto& f : {kA1, kA2}) {
        for (unsigned j : {0u, 1u, 2u}) {
            for (const auto& s : eig2d(f, j).squares) {
                ASSERT_TRUE(s.resultant_multiplicity.has_value());
                EXPECT_EQ(*s.resultant_multiplicity, s.multiplicity);
            }
        }
    }
    for (const auto& s : eig2d({1, 1, 1, 1}, 0).squares) {
        EXPECT_EQ(s.resultant_multiplicity, s.multiplicity);
    }
}

TEST(EigDirectSum, Examples) {
    const auto a5 = eig_direct_sum(kA1, 2);
    EXPECT_EQ(exact_squares(a5), (std::map<Rational, unsigned>{{1, 5}, {q("1/2"), 7}, {q("1/3"), 3}}));
    EXPECT_EQ(a5.class_count, 15u);
    expect_sound(a5);

    const auto a4 = eig_direct_sum(kA2, 1);
    EXPECT_EQ(exact_squares(a4), (std::map<Rational, unsigned>{{1, 4}, {q("1/2"), 3}}));
    expect_sound(a4);

    const auto base = eig_direct_sum(kA2, 0);
    const auto plain = eig2d(kA2, 0);
    EXPECT_TRUE(same_squares(base, plain));
    EXPECT_EQ(base.class_count, plain.class_count);
    EXPECT_EQ(base.pairs.size(), plain.pairs.size());
}

TEST(EigDirectSum, ClassCountFormula) {
    for (unsigned k = 0; k <= 6; ++k) {
        const auto report = eig_direct_sum(kA1, k);
        EXPECT_EQ(report.class_count, (1u << (k + 2)) - 1);
        EXPECT_EQ(report.pairs.size(), 2u * report.class_count);
        EXPECT_EQ(report.total_square_multiplicity(), report.class_count);
        expect_sound(report);
        expect_sign_symmetry(report);
    }
}

TEST(EigDirectSum, GenericBlocks) {
    std::mt19937_64 rng(53);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 10; ++trial) {
        const BinaryCubic f = symtensor::testing::random_cubic(rng, 20, 5);
        const auto base = eig2d(f, 0);
        bool generic = base.class_count == 3 && base.pairs.size() == 6;
        for (const auto& p : base.pairs) {
            generic = generic && std::fabs(p.lambda.value) > 1e-9;
        }
        if (!generic) {
            continue;
        }
        ++checked;
        for (unsigned k = 0; k <= 3; ++k) {
            const auto report = eig_direct_sum(f, k);
            EXPECT_EQ(report.class_count, (1u << (k + 2)) - 1) << f.to_string();
            expect_sound(report);
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(EigUnit, Examples) {
    const auto u2 = eig_unit(2);
    EXPECT_EQ(exact_squares(u2), (std::map<Rational, unsigned>{{1, 2}, {q("1/2"), 1}}));
    EXPECT_EQ(u2.class_count, 3u);
    EXPECT_EQ(exact_squares(eig_unit(1)), (std::map<Rational, unsigned>{{1, 1}}));
    EXPECT_EQ(eig_unit(4).class_count, 15u);
    EXPECT_THROW(eig_unit(0), std::invalid_argument);
}

TEST(EigUnit, MatchesBruteForce) {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto report = eig_unit(n);
        const symtensor::testing::BruteForce oracle = symtensor::testing::brute_force_unit(n);
        EXPECT_EQ(report.class_count, oracle.classes);
        EXPECT_EQ(report.class_count, (1u << n) - 1);
        EXPECT_EQ(exact_squares(report), oracle.squares);
        expect_sound(report);
        expect_sign_symmetry(report);
    }
}

TEST(Counterexample, SmallDimensions) {
    const auto p2 = build_counterexample(2);
    EXPECT_TRUE(p2.verdict);
    EXPECT_EQ(exact_squares(p2.report1), (std::map<Rational, unsigned>{{1, 3}}));
    EXPECT_EQ(exact_squares(p2.report2), (std::map<Rational, unsigned>{{1, 3}}));
    EXPECT_EQ(p2.class1.to_string(), "C");
    EXPECT_EQ(p2.class2.to_string(), "RxR");

    const auto p3 = build_counterexample(3);
    EXPECT_TRUE(p3.verdict);
    const std::map<Rational, unsigned> n3{{1, 4}, {q("1/2"), 3}};
    EXPECT_EQ(exact_squares(p3.report1), n3);
    EXPECT_EQ(exact_squares(p3.report2), n3);
    EXPECT_EQ(p3.class1.to_string(), "C×R");
    EXPECT_EQ(p3.class2.to_string(), "R×R×R");

    const auto p4 = build_counterexample(4);
    EXPECT_TRUE(p4.verdict);
    const std::map<Rational, unsigned> n4{{1, 5}, {q("1/2"), 7}, {q("1/3"), 3}};
    EXPECT_EQ(exact_squares(p4.report1), n4);
    EXPECT_EQ(exact_squares(p4.report2), n4);

    EXPECT_THROW(build_counterexample(1), std::invalid_argument);
}

TEST(Counterexample, TensorsMatchBlocks) {
    const auto p = build_counterexample(5);
    EXPECT_EQ(p.t1, direct_sum(cubic_to_tensor(kA1), 3));
    EXPECT_EQ(p.t2, direct_sum(cubic_to_tensor(kA2), 3));
    expect_sound(p.report1);
    expect_sound(p.report2);
}

TEST(SameSquares, ToleranceAndMultiplicity) {
    EigenvalueReport a;
    EigenvalueReport b;
    a.squares.push_back({RealValue::approx(0.5), 2, false, std::nullopt});
    b.squares.push_back({RealValue::of(q("1/2")), 2, false, std::nullopt});
    EXPECT_TRUE(same_squares(a, b));
    b.squares[0].multiplicity = 1;
    EXPECT_FALSE(same_squares(a, b));
    b.squares[0] = {RealValue::approx(0.5 + 1e-9), 2, false, std::nullopt};
    EXPECT_FALSE(same_squares(a, b));
}

TEST(Snap, IrrationalSquaresStayInexact) {
    // (1, 0, 0, 1) + small shear gives irrational λ^2 values; none may snap falsely.
    const auto report = eig2d({1, 0, 0, 2}, 0);
    expect_sound(report);
    for (const auto& s : report.squares) {
        if (!s.value.is_exact()) {
            EXPECT_FALSE(s.snapped);
        }
    }
}

TEST(RecognizeUnitDirectSum, Shapes) {
    const auto a3 = recognize_unit_direct_sum(direct_sum(cubic_to_tensor(kA2), 2));
    ASSERT_TRUE(a3.has_value());
    EXPECT_EQ(a3->block, kA2);
    EXPECT_EQ(a3->k, 2u);
    EXPECT_TRUE(recognize_unit_direct_sum(cubic_to_tensor(kA1)).has_value());
    SymTensor3 cross = direct_sum(cubic_to_tensor(kA1), 1);
    cross.set(1, 2, 3, Rational(1));
    EXPECT_FALSE(recognize_unit_direct_sum(cross).has_value());
    SymTensor3 scaled = direct_sum(cubic_to_tensor(kA1), 1);
    scaled.set(3, 3, 3, Rational(2));
    EXPECT_FALSE(recognize_unit_direct_sum(scaled).has_value());
    EXPECT_FALSE(recognize_unit_direct_sum(unit_tensor(1)).has_value());
}
