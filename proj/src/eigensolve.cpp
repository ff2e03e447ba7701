#include "symtensor/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symtensor/resultant.hpp"
#include "symtensor/roots.hpp"

namespace symtensor {

Residual residual(const SymTensor3& tensor, double lambda, const std::vector<double>& x) {
    if (x.size() != tensor.dim()) {
        throw std::invalid_argument("vector length does not match tensor dimension");
    }
    const std::vector<long double> xl(x.begin(), x.end());
    const auto ax2 = tensor.contract(xl);
    long double worst = 0.0L;
    long double norm = 0.0L;
    for (std::size_t i = 0; i < xl.size(); ++i) {
        worst = std::max(worst, std::fabs(ax2[i] - static_cast<long double>(lambda) * xl[i]));
        norm += xl[i] * xl[i];
    }
    return {static_cast<double>(worst), static_cast<double>(std::fabs(norm - 1.0L))};
}

unsigned EigenvalueReport::total_square_multiplicity() const {
    unsigned total = 0;
    for (const auto& s : squares) {
        total += s.multiplicity;
    }
    return total;
}

namespace {

bool values_match(const RealValue& lhs, const RealValue& rhs) {
    if (lhs.is_exact() && rhs.is_exact()) {
        return *lhs.exact == *rhs.exact;
    }
    return std::fabs(lhs.value - rhs.value) < kSquareMatchTolerance;
}

// Adds `count` copies of `value` to a sorted square multiset.
void add_square(std::vector<SquareEntry>& squares, const SquareEntry& entry, unsigned weight) {
    for (auto& s : squares) {
        if (values_match(s.value, entry.value)) {
            s.multiplicity += entry.multiplicity * weight;
            s.snapped = s.snapped || entry.snapped;
            if (entry.resultant_multiplicity && s.resultant_multiplicity) {
                *s.resultant_multiplicity += *entry.resultant_multiplicity * weight;
            } else {
                s.resultant_multiplicity.reset();
            }
            return;
        }
    }
    SquareEntry copy = entry;
    copy.multiplicity *= weight;
    if (copy.resultant_multiplicity) {
        *copy.resultant_multiplicity *= weight;
    }
    squares.push_back(copy);
    std::sort(squares.begin(), squares.end(),
              [](const SquareEntry& a, const SquareEntry& b) { return a.value.value < b.value.value; });
}

// Replaces an inexact value by p/q (q <= 10^6) when within kSnapTolerance.
RealValue snap(double value, bool& snapped) {
    snapped = false;
    const Rational candidate = best_rational_approximation(value, kSnapMaxDenominator);
    if (std::fabs(candidate.to_double() - value) < kSnapTolerance) {
        snapped = true;
        return RealValue::of(candidate);
    }
    return RealValue::approx(value);
}

// λ = sign · sqrt(square), exact when the square is a rational square.
RealValue signed_root(const RealValue& square, long double approx_lambda) {
    if (square.is_exact()) {
        if (auto root = square.exact->exact_sqrt()) {
            return RealValue::of(approx_lambda < 0 ? -*root : *root);
        }
    }
    return RealValue::approx(static_cast<double>(approx_lambda));
}

RealValue negate(const RealValue& v) {
    return v.is_exact() ? RealValue::of(-*v.exact) : RealValue::approx(-v.value);
}

std::vector<std::vector<unsigned>> subsets(unsigned first, unsigned count, unsigned size) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    const auto rec = [&](const auto& self, unsigned next) -> void {
        if (current.size() == size) {
            out.push_back(current);
            return;
        }
        for (unsigned v = next; v < first + count; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, first);
    return out;
}

unsigned binomial(unsigned n, unsigned k) {
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return static_cast<unsigned>(r);
}

// Multiplicity of μ as a root of p(μ); exact comparison when possible.
unsigned root_multiplicity(const std::vector<RealRoot>& roots, const RealValue& mu) {
    for (const auto& r : roots) {
        if (r.exact && mu.exact) {
            if (*r.exact == *mu.exact) {
                return r.multiplicity;
            }
        } else if (std::fabs(r.value - mu.value) < 1e-8 * std::max(1.0, std::fabs(mu.value))) {
            return r.multiplicity;
        }
    }
    return 0;
}

struct DirectionRoot {
    std::optional<Rational> t;  // exact slope v/u
    long double t_approx = 0.0L;
    bool at_infinity = false;
    unsigned multiplicity = 0;
};

std::vector<DirectionRoot> direction_roots(const BinaryCubic& f, double tol) {
    const UniPoly cubic(std::vector<Rational>{f.b, Rational(2) * f.c - f.a, f.d - Rational(2) * f.b, -f.c});
    if (cubic.is_zero()) {
        throw DegenerateInput("direction cubic vanishes identically; eigenvectors are not isolated");
    }
    std::vector<DirectionRoot> out;
    if (cubic.degree() >= 1) {
        for (const auto& r : real_roots(cubic, tol)) {
            DirectionRoot d;
            d.t = r.exact;
            d.t_approx = r.exact ? r.exact->to_long_double() : r.value;
            d.multiplicity = r.multiplicity;
            out.push_back(d);
        }
    }
    if (cubic.degree() < 3) {
        DirectionRoot d;
        d.at_infinity = true;
        d.multiplicity = static_cast<unsigned>(3 - cubic.degree());
        out.push_back(d);
    }
    return out;
}

}  // namespace

bool same_squares(const EigenvalueReport& lhs, const EigenvalueReport& rhs) {
    if (lhs.squares.size() != rhs.squares.size()) {
        return false;
    }
    for (std::size_t i = 0; i < lhs.squares.size(); ++i) {
        if (lhs.squares[i].multiplicity != rhs.squares[i].multiplicity ||
            !values_match(lhs.squares[i].value, rhs.squares[i].value)) {
            return false;
        }
    }
    return true;
}

EigenvalueReport eig2d(const BinaryCubic& f, unsigned j, double tol) {
    const auto roots = direction_roots(f, tol);
    const unsigned dim = 2 + j;
    const SymTensor3 tensor = direct_sum(cubic_to_tensor(f), j);
    EigenvalueReport report;
    report.dim = dim;

    std::vector<RealRoot> resultant_roots;
    bool have_resultant = false;
    {
        const UniPoly psi = reduced_charpoly(f, j);
        if (!psi.is_zero() && psi.is_even() && psi.degree() > 0) {
            resultant_roots = real_roots(psi.even_part_in_square(), tol);
            have_resultant = true;
        }
    }

    std::vector<unsigned> pinned;
    for (unsigned i = 3; i <= dim; ++i) {
        pinned.push_back(i);
    }
    const long double jl = j;

    const auto emit = [&](const RealValue& square, bool snapped, long double lambda,
                          const std::vector<long double>& x, Branch branch) {
        add_square(report.squares, SquareEntry{square, branch.multiplicity, snapped, std::nullopt}, 1);
        report.class_count += branch.multiplicity;
        if (snapped) {
            ++report.snap_events;
        }
        const RealValue lam = signed_root(square, lambda);
        for (int sign : {1, -1}) {
            Eigenpair pair;
            pair.lambda = sign > 0 ? lam : negate(lam);
            pair.vector.reserve(x.size());
            for (auto xi : x) {
                pair.vector.push_back(static_cast<double>(sign * xi));
            }
            pair.branch = branch;
            pair.residual = residual(tensor, pair.lambda.value, pair.vector);
            report.pairs.push_back(std::move(pair));
        }
    };

    const long double a = f.a.to_long_double();
    const long double b = f.b.to_long_double();
    const long double c = f.c.to_long_double();
    const long double d = f.d.to_long_double();

    unsigned index = 0;
    for (const auto& root : roots) {
        ++index;
        // Unit direction (u, v), q = (a u^2 + 2b u v + c v^2) / u, or q = d at u = 0.
        long double u = 0.0L;
        long double v = 1.0L;
        long double q = d;
        std::optional<Rational> q_sq;  // exact q^2
        if (root.at_infinity) {
            q_sq = f.d * f.d;
        } else {
            const long double t = root.t_approx;
            const long double h = std::sqrt(1.0L + t * t);
            u = 1.0L / h;
            v = t / h;
            q = (a + 2.0L * b * t + c * t * t) / h;
            if (root.t) {
                const Rational& te = *root.t;
                const Rational num = f.a + Rational(2) * f.b * te + f.c * te * te;
                q_sq = num * num / (Rational(1) + te * te);
            }
        }
        if (j >= 1 && (q_sq ? q_sq->is_zero() : std::fabs(q) == 0.0L)) {
            continue;
        }
        const long double r = 1.0L / std::sqrt(1.0L + jl * q * q);
        const long double lambda = r * q;
        RealValue square;
        bool snapped = false;
        if (q_sq) {
            square = RealValue::of(*q_sq / (Rational(1) + Rational(static_cast<long>(j)) * *q_sq));
        } else {
            square = snap(static_cast<double>(lambda * lambda), snapped);
        }
        std::vector<long double> x(dim, lambda);
        x[0] = r * u;
        x[1] = r * v;
        Branch branch{Branch::Kind::Direction, pinned, index, root.multiplicity};
        emit(square, snapped, lambda, x, branch);
    }
    if (j >= 1) {
        const Rational sq = Rational(1) / Rational(static_cast<long>(j));
        const long double lambda = 1.0L / std::sqrt(jl);
        std::vector<long double> x(dim, lambda);
        x[0] = 0.0L;
        x[1] = 0.0L;
        emit(RealValue::of(sq), false, lambda, x, Branch{Branch::Kind::ZeroBlock, pinned, 0, 1});
    }
    // One lookup per distinct square: it is a root multiplicity, not a count.
    if (have_resultant) {
        for (auto& s : report.squares) {
            s.resultant_multiplicity = root_multiplicity(resultant_roots, s.value);
        }
    }
    return report;
}

EigenvalueReport eig_direct_sum(const BinaryCubic& f, unsigned k, double tol) {
    const unsigned dim = 2 + k;
    const SymTensor3 tensor = direct_sum(cubic_to_tensor(f), k);
    EigenvalueReport report;
    report.dim = dim;
    for (unsigned j = 0; j <= k; ++j) {
        const EigenvalueReport branch = eig2d(f, j, tol);
        const unsigned weight = binomial(k, j);
        for (const auto& s : branch.squares) {
            add_square(report.squares, s, weight);
        }
        report.class_count += branch.class_count * weight;
        report.snap_events += branch.snap_events * weight;
        for (const auto& support : subsets(3, k, j)) {
            for (const auto& pair : branch.pairs) {
                Eigenpair embedded;
                embedded.lambda = pair.lambda;
                embedded.vector.assign(dim, 0.0);
                embedded.vector[0] = pair.vector[0];
                embedded.vector[1] = pair.vector[1];
                for (std::size_t s = 0; s < support.size(); ++s) {
                    embedded.vector[support[s] - 1] = pair.vector[2 + s];
                }
                embedded.branch = pair.branch;
                embedded.branch.pinned = support;
                embedded.residual = residual(tensor, embedded.lambda.value, embedded.vector);
                report.pairs.push_back(std::move(embedded));
            }
        }
    }
    return report;
}

EigenvalueReport eig_unit(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("unit tensor dimension must be at least 1");
    }
    const SymTensor3 tensor = unit_tensor(n);
    EigenvalueReport report;
    report.dim = n;
    for (unsigned j = 1; j <= n; ++j) {
        const Rational sq = Rational(1) / Rational(static_cast<long>(j));
        const unsigned weight = binomial(n, j);
        add_square(report.squares, SquareEntry{RealValue::of(sq), 1, false, std::nullopt}, weight);
        report.class_count += weight;
        const RealValue lam = signed_root(RealValue::of(sq), 1.0L);
        const double value = lam.is_exact() ? lam.value : static_cast<double>(1.0L / std::sqrt(static_cast<long double>(j)));
        for (const auto& support : subsets(1, n, j)) {
            for (int sign : {1, -1}) {
                Eigenpair pair;
                pair.lambda = sign > 0 ? lam : negate(lam);
                if (!lam.is_exact()) {
                    pair.lambda = RealValue::approx(sign * value);
                }
                pair.vector.assign(n, 0.0);
                for (auto i : support) {
                    pair.vector[i - 1] = sign * value;
                }
                pair.branch = Branch{Branch::Kind::ZeroBlock, support, 0, 1};
                pair.residual = residual(tensor, pair.lambda.value, pair.vector);
                report.pairs.push_back(std::move(pair));
            }
        }
    }
    return report;
}

BinaryCubic counterexample_block(int which) {
    if (which == 1) {
        return {1, 0, -1, 0};
    }
    if (which == 2) {
        return {1, 0, Rational(1, 2), 0};
    }
    throw std::invalid_argument("counterexample block must be 1 or 2");
}

std::optional<UnitDirectSum> recognize_unit_direct_sum(const SymTensor3& tensor) {
    if (tensor.dim() < 2) {
        return std::nullopt;
    }
    for (const auto& [idx, value] : tensor.entries()) {
        if (idx[2] <= 2) {
            continue;
        }
        if (!(idx[0] == idx[2] && value == Rational(1))) {
            return std::nullopt;
        }
    }
    for (unsigned i = 3; i <= tensor.dim(); ++i) {
        if (tensor.at(i, i, i) != Rational(1)) {
            return std::nullopt;
        }
    }
    UnitDirectSum out;
    out.block = {tensor.at(1, 1, 1), tensor.at(1, 1, 2), tensor.at(1, 2, 2), tensor.at(2, 2, 2)};
    out.k = tensor.dim() - 2;
    return out;
}

CounterexamplePair build_counterexample(unsigned n) {
    if (n < 2) {
        throw std::invalid_argument("counterexample requires dimension n >= 2");
    }
    const unsigned k = n - 2;
    const BinaryCubic a1 = counterexample_block(1);
    const BinaryCubic a2 = counterexample_block(2);
    CounterexamplePair out{direct_sum(cubic_to_tensor(a1), k),
                           direct_sum(cubic_to_tensor(a2), k),
                           eig_direct_sum(a1, k),
                           eig_direct_sum(a2, k),
                           center_of_direct_sum(a1, k).cls,
                           center_of_direct_sum(a2, k).cls,
                           false};
    out.verdict = same_squares(out.report1, out.report2) && !(out.class1 == out.class2);
    return out;
}

}  // namespace symtensor
