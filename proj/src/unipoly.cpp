#include "symtensor/unipoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace symtensor {

UniPoly::UniPoly(Rational constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(std::move(constant));
    }
}

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, unsigned power) {
    if (c.is_zero()) {
        return {};
    }
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational UniPoly::coeff(unsigned power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double UniPoly::evaluate(double x) const {
    return static_cast<double>(evaluate(static_cast<long double>(x)));
}

long double UniPoly::evaluate(long double x) const {
    long double acc = 0.0L;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->to_long_double();
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) {
        return {};
    }
    UniPoly out = *this;
    out *= coeffs_.back().inverse();
    return out;
}

UniPoly UniPoly::scale_variable(const Rational& scale) const {
    std::vector<Rational> out = coeffs_;
    Rational factor(1);
    for (auto& c : out) {
        c *= factor;
        factor *= scale;
    }
    return UniPoly(std::move(out));
}

bool UniPoly::is_even() const {
    for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
        if (!coeffs_[i].is_zero()) {
            return false;
        }
    }
    return true;
}

UniPoly UniPoly::even_part_in_square() const {
    if (!is_even()) {
        throw std::invalid_argument("polynomial has odd-power terms");
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < coeffs_.size(); i += 2) {
        out.push_back(coeffs_[i]);
    }
    return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int power = degree(); power >= 0; --power) {
        const Rational& c = coeffs_[static_cast<std::size_t>(power)];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) {
                os << "-";
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational magnitude = c.abs();
        const bool unit = magnitude == Rational(1);
        if (power == 0 || !unit) {
            if (magnitude.is_integer() || power == 0) {
                os << magnitude;
            } else {
                os << "(" << magnitude << ")";
            }
        }
        if (power >= 1) {
            os << var;
        }
        if (power >= 2) {
            os << "^" << power;
        }
    }
    return os.str();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
    *this = *this * other;
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

UniPoly pow(const UniPoly& base, unsigned exponent) {
    UniPoly result(1);
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor) {
    if (divisor.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (dividend.degree() < divisor.degree()) {
        return {UniPoly(), dividend};
    }
    std::vector<Rational> rem = dividend.coefficients();
    const auto& den = divisor.coefficients();
    const std::size_t shift_max = rem.size() - den.size();
    std::vector<Rational> quot(shift_max + 1);
    const Rational lead_inv = den.back().inverse();
    for (std::size_t s = shift_max + 1; s-- > 0;) {
        const Rational q = rem[s + den.size() - 1] * lead_inv;
        quot[s] = q;
        if (q.is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i < den.size(); ++i) {
            rem[s + i] -= q * den[i];
        }
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& lhs, const UniPoly& rhs) {
    UniPoly a = lhs;
    UniPoly b = rhs;
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

SquareFreeDecomposition square_free_decomposition(const UniPoly& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("square-free decomposition of the zero polynomial");
    }
    SquareFreeDecomposition out{p.leading(), {}};
    const UniPoly f = p.monic();
    if (f.degree() == 0) {
        return out;
    }
    // Yun's algorithm.
    UniPoly a = gcd(f, f.derivative());
    UniPoly b = divmod(f, a).first;
    UniPoly c = divmod(f.derivative(), a).first;
    UniPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UniPoly g = gcd(b, d);
        out.factors.push_back(g);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
    }
    while (!out.factors.empty() && out.factors.back().degree() == 0) {
        out.factors.pop_back();
    }
    return out;
}

std::vector<mpz_class> primitive_integer_coefficients(const UniPoly& p) {
    mpz_class lcm_den = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(p.coefficients().size());
    mpz_class content = 0;
    for (const auto& c : p.coefficients()) {
        mpz_class v = c.numerator() * (lcm_den / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (content != 0) {
        for (auto& v : ints) {
            v /= content;
        }
    }
    return ints;
}

}  // namespace symtensor
