#include "symtensor/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symtensor {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    if (p.is_zero()) {
        return seq;
    }
    seq.push_back(p);
    UniPoly next = p.derivative();
    while (!next.is_zero()) {
        seq.push_back(next);
        const auto& a = seq[seq.size() - 2];
        const auto& b = seq.back();
        UniPoly r = -divmod(a, b).second;
        next = r;
    }
    return seq;
}

int sign_variations(const std::vector<UniPoly>& sequence, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& p : sequence) {
        const int s = p.evaluate(x).sign();
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

namespace {

// Power of two strictly greater than every root magnitude (Cauchy bound).
Rational root_bound(const UniPoly& p) {
    const Rational lead = p.leading().abs();
    Rational max_ratio(0);
    for (int i = 0; i < p.degree(); ++i) {
        const Rational r = p.coeff(static_cast<unsigned>(i)).abs() / lead;
        max_ratio = std::max(max_ratio, r);
    }
    Rational bound(1);
    const Rational target = max_ratio + Rational(1);
    while (bound <= target) {
        bound *= Rational(2);
    }
    return bound;
}

struct Interval {
    Rational lo;  // exclusive
    Rational hi;  // inclusive
};

// Splits (lo, hi] into intervals each holding exactly one root of the
// square-free polynomial whose Sturm sequence is given.
void isolate(const std::vector<UniPoly>& seq, const Rational& lo, const Rational& hi,
             int var_lo, int var_hi, std::vector<Interval>& out) {
    const int count = var_lo - var_hi;
    if (count <= 0) {
        return;
    }
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    const int var_mid = sign_variations(seq, mid);
    isolate(seq, lo, mid, var_lo, var_mid, out);
    isolate(seq, mid, hi, var_mid, var_hi, out);
}

mpz_class ceil_div(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class floor_div(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Roots of a square-free polynomial, each reported once.
std::vector<RealRoot> roots_of_square_free(const UniPoly& factor, unsigned multiplicity, double tol) {
    std::vector<RealRoot> roots;
    if (factor.degree() < 1) {
        return roots;
    }
    const auto ints = primitive_integer_coefficients(factor);
    std::vector<Rational> int_coeffs;
    int_coeffs.reserve(ints.size());
    for (const auto& c : ints) {
        int_coeffs.emplace_back(c);
    }
    const UniPoly prim(std::move(int_coeffs));
    const mpz_class lead = ::abs(ints.back());

    const auto seq = sturm_sequence(prim);
    const Rational bound = root_bound(prim);
    std::vector<Interval> intervals;
    isolate(seq, -bound, bound, sign_variations(seq, -bound), sign_variations(seq, bound), intervals);

    const Rational lead_q{mpz_class(lead)};
    for (auto& iv : intervals) {
        if (prim.evaluate(iv.hi).is_zero()) {
            roots.push_back({iv.hi.to_double(), multiplicity, iv.hi});
            continue;
        }
        // Shrink until lead·(hi - lo) < 1, so at most one candidate m/lead remains
        // besides the endpoints.
        int sign_lo = prim.evaluate(iv.lo).sign();
        auto bisect_once = [&]() -> std::optional<Rational> {
            const Rational mid = (iv.lo + iv.hi) / Rational(2);
            const int s = prim.evaluate(mid).sign();
            if (s == 0) {
                return mid;
            }
            if (s == sign_lo) {
                iv.lo = mid;
            } else {
                iv.hi = mid;
            }
            return std::nullopt;
        };
        // sign_lo may be 0 only if lo is itself a root, which belongs to the
        // neighbouring interval; nudge by one bisection in that case.
        std::optional<Rational> hit;
        if (sign_lo == 0) {
            // The open endpoint is a root of a different interval; use hi's sign.
            sign_lo = -prim.evaluate(iv.hi).sign();
        }
        while (!hit && (iv.hi - iv.lo) * lead_q >= Rational(1)) {
            hit = bisect_once();
        }
        if (!hit) {
            const mpz_class first = ceil_div((iv.lo * lead_q).raw());
            const mpz_class last = floor_div((iv.hi * lead_q).raw());
            for (mpz_class m = first; m <= last && !hit; ++m) {
                const Rational candidate(m, lead);
                if (candidate > iv.lo && prim.evaluate(candidate).is_zero()) {
                    hit = candidate;
                }
            }
        }
        if (hit) {
            roots.push_back({hit->to_double(), multiplicity, *hit});
            continue;
        }
        // Irrational root: exact bisection down to the requested width.
        const double scale_tol = std::max(tol * 1e-4, 1e-18);
        for (int iter = 0; iter < 400 && !hit; ++iter) {
            const double width = (iv.hi - iv.lo).to_double();
            const double mag = std::max(1.0, std::fabs(iv.hi.to_double()));
            if (width < scale_tol * mag) {
                break;
            }
            hit = bisect_once();
        }
        if (hit) {
            roots.push_back({hit->to_double(), multiplicity, *hit});
        } else {
            const Rational mid = (iv.lo + iv.hi) / Rational(2);
            roots.push_back({mid.to_double(), multiplicity, std::nullopt});
        }
    }
    return roots;
}

}  // namespace

std::vector<RealRoot> real_roots(const UniPoly& p, double tol) {
    if (p.is_zero()) {
        throw std::invalid_argument("real_roots of the zero polynomial");
    }
    const auto sqf = square_free_decomposition(p);
    std::vector<RealRoot> roots;
    for (std::size_t i = 0; i < sqf.factors.size(); ++i) {
        auto part = roots_of_square_free(sqf.factors[i], static_cast<unsigned>(i + 1), tol);
        roots.insert(roots.end(), part.begin(), part.end());
    }
    std::sort(roots.begin(), roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    return roots;
}

}  // namespace symtensor
