// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symtensor/center.hpp"
#include "symtensor/eigensolve.hpp"
#include "symtensor/resultant.hpp"
#include "test_support.hpp"

using namespace symtensor;
using symtensor::testing::random_cubic;
using symtensor::testing::random_invertible;
using symtensor::testing::random_tensor;

namespace {

using Clock = std::chrono::steady_clock;
using SquareMap = std::map<Rational, unsigned>;

const UniPoly kLambda = UniPoly::variable();
const UniPoly kL2 = kLambda * kLambda;
const BinaryCubic kA1{1, 0, -1, 0};
const BinaryCubic kA2{1, 0, Rational(mpz_class(1), mpz_class(2)), 0};

Rational q(const char* text) { return Rational::parse(text); }

// Collects failure messages for one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 5) {
            failures_.push_back(what);
        }
        failed_ = failed_ || !ok;
    }
    void note(std::string text) { note_ = std::move(text); }
    bool passed() const { return !failed_; }
    const std::string& note() const { return note_; }
    std::string detail() const {
        std::string s;
        for (const auto& f : failures_) {
            s += (s.empty() ? "" : "; ") + f;
        }
        return s;
    }

private:
    bool failed_ = false;
    std::vector<std::string> failures_;
    std::string note_;
};

// Every eigenpair produced during the run, for criterion 9.
struct ResidualLedger {
    std::size_t pairs = 0;
    double worst_equation = 0.0;
    double worst_norm = 0.0;

    void record(const EigenvalueReport& report) {
        for (const auto& p : report.pairs) {
            ++pairs;
            worst_equation = std::max(worst_equation, p.residual.equation);
            worst_norm = std::max(worst_norm, symtensor::testing::unit_norm_error(p.vector));
            worst_norm = std::max(worst_norm, p.residual.normalization);
        }
    }
};

ResidualLedger ledger;

std::optional<SquareMap> exact_squares(const EigenvalueReport& report) {
    SquareMap out;
    for (const auto& s : report.squares) {
        if (!s.value.is_exact()) {
            return std::nullopt;
        }
        out[*s.value.exact] += s.multiplicity;
    }
    return out;
}

std::string describe(const std::optional<SquareMap>& m) {
    if (!m) {
        return "<inexact>";
    }
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto it = m->rbegin(); it != m->rend(); ++it) {
        os << (first ? "" : ", ") << it->first << ":" << it->second;
        first = false;
    }
    os << "}";
    return os.str();
}

void expect_squares(Check& check, const EigenvalueReport& report, const SquareMap& want, const std::string& label) {
    ledger.record(report);
    const auto got = exact_squares(report);
    check.expect(got && *got == want, label + " squares " + describe(got) + " != " + describe(want));
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Check criterion1() {
    Check c;
    const auto start = Clock::now();
    const CharPoly det = charpoly_det({1, 1, 1, 1});
    const CharPoly closed = charpoly_closed_form({1, 1, 1, 1});
    const EigenvalueReport report = eig2d({1, 1, 1, 1}, 0);
    const double ms = elapsed_ms(start);
    const UniPoly want = Rational(-8) * pow(kLambda, 6) + Rational(64) * pow(kLambda, 4);
    c.expect(det.poly == want, "det gave " + det.poly.to_string());
    c.expect(closed.poly == want, "closed form gave " + closed.poly.to_string());
    expect_squares(c, report, {{0, 2}, {8, 1}}, "eig2d(1,1,1,1)");
    c.expect(ms < 10.0, "runtime " + std::to_string(ms) + " ms");
    return c;
}

Check criterion2() {
    Check c;
    const UniPoly cube = pow(kL2 - UniPoly(1), 3);
    const UniPoly psi1 = charpoly_det(kA1).poly;
    const UniPoly psi2 = charpoly_det(kA2).poly;
    c.expect(psi1 == Rational(-16) * cube, "Psi_A1 = " + psi1.to_string());
    c.expect(psi2 == q("-1/4") * cube, "Psi_A2 = " + psi2.to_string());
    c.expect(charpoly_closed_form(kA1).poly == psi1, "closed form A1");
    c.expect(charpoly_closed_form(kA2).poly == psi2, "closed form A2");
    expect_squares(c, eig2d(kA1, 0), {{1, 3}}, "A1");
    expect_squares(c, eig2d(kA2, 0), {{1, 3}}, "A2");
    return c;
}

Check criterion3() {
    Check c;
    const UniPoly tail = (kL2 - UniPoly(1)) * pow(Rational(2) * kL2 - UniPoly(1), 3);
    const UniPoly r1 = reduced_charpoly(kA1, 1);
    const UniPoly r2 = reduced_charpoly(kA2, 1);
    c.expect(r1 == Rational(16) * tail, "reduced A1 = " + r1.to_string());
    c.expect(r2 == q("1/4") * tail, "reduced A2 = " + r2.to_string());
    const SquareMap n3{{1, 4}, {q("1/2"), 3}};
    const SquareMap n4{{1, 5}, {q("1/2"), 7}, {q("1/3"), 3}};
    expect_squares(c, eig_direct_sum(kA1, 1), n3, "A1+I1");
    expect_squares(c, eig_direct_sum(kA2, 1), n3, "A2+I1");
    expect_squares(c, eig_direct_sum(kA1, 2), n4, "A1+I2");
    expect_squares(c, eig_direct_sum(kA2, 2), n4, "A2+I2");
    return c;
}

Check criterion4() {
    Check c;
    std::mt19937_64 rng(4001);
    std::vector<BinaryCubic> inputs;
    for (int i = 0; i < 1000; ++i) {
        inputs.push_back(random_cubic(rng, 100, 10));
    }
    const auto start = Clock::now();
    int mismatches = 0;
    for (const auto& f : inputs) {
        if (charpoly_det(f).poly != charpoly_closed_form(f).poly) {
            ++mismatches;
            c.expect(false, "mismatch at " + f.to_string());
        }
    }
    const double ms = elapsed_ms(start);
    c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
    c.expect(ms < 5000.0, "runtime " + std::to_string(ms) + " ms");
    return c;
}

Check criterion5() {
    Check c;
    std::mt19937_64 rng(5001);
    const std::vector<CanonicalClass> classes = {CanonicalClass::SingleCube, CanonicalClass::Fermat,
                                                 CanonicalClass::TraceForm, CanonicalClass::Degenerate2};
    for (int trial = 0; trial < 200; ++trial) {
        // Half the seeds are canonical representatives, so every orbit type is exercised.
        const BinaryCubic f = trial % 2 == 0 ? canonical_representative(classes[(trial / 2) % classes.size()])
                                             : random_cubic(rng, 100, 10);
        const RationalMatrix p = random_invertible(rng, 2, 9, 4);
        const BinaryCubic g = tensor_to_cubic(apply_change(cubic_to_tensor(f), p));
        const CanonicalClass cls = classify_cubic(f);
        c.expect(classify_cubic(g) == cls, "class changed for " + f.to_string());
        const CanonicalTransform ct = canonical_transform(g);
        c.expect(ct.cls == cls, "transform class for " + g.to_string());
        const BinaryCubic target = canonical_representative(cls);
        if (ct.transform.is_exact()) {
            const BinaryCubic h = tensor_to_cubic(apply_change(cubic_to_tensor(g), ct.transform.exact_matrix()));
            c.expect(h == target, "exact round trip " + g.to_string() + " -> " + h.to_string());
        } else {
            const RealSymTensor3 h = apply_change(cubic_to_tensor(g), ct.transform);
            const double dev = std::max({std::fabs(h.at(1, 1, 1) - target.a.to_double()),
                                         std::fabs(h.at(1, 1, 2) - target.b.to_double()),
                                         std::fabs(h.at(1, 2, 2) - target.c.to_double()),
                                         std::fabs(h.at(2, 2, 2) - target.d.to_double())});
            c.expect(dev < 1e-9, "float round trip deviation " + std::to_string(dev) + " at " + g.to_string());
        }
    }
    return c;
}

bool same_span(const CenterAlgebra& lhs, const CenterAlgebra& rhs) {
    if (lhs.dimension() != rhs.dimension()) {
        return false;
    }
    for (const auto& x : lhs.basis) {
        if (!in_span(rhs, x)) {
            return false;
        }
    }
    for (const auto& x : rhs.basis) {
        if (!in_span(lhs, x)) {
            return false;
        }
    }
    return true;
}

SymTensor3 criterion6_instance(std::mt19937_64& rng, int trial, unsigned dim) {
    // Alternate generic tensors with direct sums, whose centers are larger.
    if (trial % 2 == 0) {
        return random_tensor(rng, dim, 5, 3);
    }
    return direct_sum(cubic_to_tensor(random_cubic(rng, 9, 3)), dim - 2);
}

Check criterion6() {
    Check c;
    std::mt19937_64 rng(6001);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned dim = 2 + trial % 3;
        const CenterAlgebra z = center(criterion6_instance(rng, trial, dim));
        c.expect(in_span(z, RationalMatrix::identity(dim)), "identity missing");
        for (const auto& x : z.basis) {
            for (const auto& y : z.basis) {
                c.expect(in_span(z, x * y), "product outside span, dim " + std::to_string(dim));
            }
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned dim = 2 + trial % 3;
        const SymTensor3 t = criterion6_instance(rng, trial, dim);
        const RationalMatrix p = random_invertible(rng, dim, 5, 3);
        const RationalMatrix p_inv = inverse(p);
        CenterAlgebra conjugated{dim, {}};
        for (const auto& x : center(t).basis) {
            conjugated.basis.push_back(p_inv * x * p);
        }
        c.expect(same_span(center(apply_change(t, p)), conjugated), "covariance failed, dim " + std::to_string(dim));
    }
    return c;
}

Check criterion7() {
    Check c;
    const auto start = Clock::now();
    for (unsigned n = 2; n <= 10; ++n) {
        const CounterexamplePair pair = build_counterexample(n);
        ledger.record(pair.report1);
        ledger.record(pair.report2);
        const auto s1 = exact_squares(pair.report1);
        const auto s2 = exact_squares(pair.report2);
        c.expect(pair.verdict, "verdict false at n=" + std::to_string(n));
        c.expect(s1 && s2 && *s1 == *s2, "squares differ at n=" + std::to_string(n));
        c.expect(!(pair.class1 == pair.class2), "classes equal at n=" + std::to_string(n));
    }
    const double ms = elapsed_ms(start);
    c.expect(ms < 5000.0, "runtime " + std::to_string(ms) + " ms");
    return c;
}

Check criterion8() {
    Check c;
    for (unsigned k = 0; k <= 8; ++k) {
        const EigenvalueReport report = eig_direct_sum(kA1, k);
        ledger.record(report);
        const unsigned want = (1u << (k + 2)) - 1;
        // ((m-1)^n - 1)/(m-2) for order m = 3 in dimension n = k + 2.
        const unsigned m = 3;
        unsigned power = 1;
        for (unsigned i = 0; i < k + 2; ++i) {
            power *= m - 1;
        }
        const unsigned generic = (power - 1) / (m - 2);
        c.expect(report.class_count == want && want == generic,
                 "k=" + std::to_string(k) + " class_count " + std::to_string(report.class_count));
        c.expect(report.pairs.size() == 2u * want, "k=" + std::to_string(k) + " pair count");
    }
    for (unsigned n = 1; n <= 10; ++n) {
        const EigenvalueReport report = eig_unit(n);
        ledger.record(report);
        c.expect(report.class_count == (1u << n) - 1, "eig_unit(" + std::to_string(n) + ") class_count");
        if (n <= 6) {
            const auto oracle = symtensor::testing::brute_force_unit(n);
            const auto got = exact_squares(report);
            c.expect(oracle.classes == report.class_count, "brute force classes at n=" + std::to_string(n));
            c.expect(got && *got == oracle.squares, "brute force squares at n=" + std::to_string(n));
        }
    }
    return c;
}

Check criterion9() {
    Check c;
    // Extra coverage beyond the criteria above: random blocks with pinned coordinates.
    std::mt19937_64 rng(9001);
    for (int trial = 0; trial < 100; ++trial) {
        ledger.record(eig_direct_sum(random_cubic(rng, 100, 10), static_cast<unsigned>(trial % 4)));
    }
    std::ostringstream os;
    os << ledger.pairs << " eigenpairs, worst residual " << ledger.worst_equation << ", worst norm error "
       << ledger.worst_norm;
    c.expect(ledger.pairs > 0, "no eigenpairs recorded");
    c.expect(ledger.worst_equation < 1e-10, os.str());
    c.expect(ledger.worst_norm < 1e-12, os.str());
    c.note(os.str());
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"1 all-ones charpoly and eigenvalues", criterion1},
        {"2 A1/A2 characteristic polynomials", criterion2},
        {"3 reduced resultants and direct-sum multisets", criterion3},
        {"4 determinant vs closed form, 1000 random", criterion4},
        {"5 classification invariance and round trip, 200 random", criterion5},
        {"6 center closure and conjugation covariance", criterion6},
        {"7 counterexample verdict n=2..10", criterion7},
        {"8 eigenpair class counts", criterion8},
        {"9 residual soundness of every eigenpair", criterion9},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = Clock::now();
        Check c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double ms = elapsed_ms(start);
        const std::string extra = c.passed() ? c.note() : c.detail();
        std::printf("%s [%s] (%.1f ms)%s%s\n", c.passed() ? "PASS" : "FAIL", name.c_str(), ms,
                    extra.empty() ? "" : " ", extra.c_str());
        failed += c.passed() ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
