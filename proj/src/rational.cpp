#include "symtensor/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace symtensor {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return mpz_class(digits, 10);
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view body = trim(text);
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(trim(body.substr(0, slash)), text);
        const mpz_class den = parse_integer(trim(body.substr(slash + 1)), text);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(num, den);
    }
    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = body.substr(0, dot);
        std::string_view frac_part = body.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part[0] == '-' || int_part[0] == '+')) {
            negative = int_part[0] == '-';
            int_part.remove_prefix(1);
        }
        if (int_part.empty() && frac_part.empty()) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        const mpz_class whole = int_part.empty() ? mpz_class(0) : parse_integer(int_part, text);
        if (!int_part.empty() && (int_part[0] == '-' || int_part[0] == '+')) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        mpz_class frac = 0;
        mpz_class scale = 1;
        if (!frac_part.empty()) {
            if (frac_part[0] == '-' || frac_part[0] == '+') {
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
            }
            frac = parse_integer(frac_part, text);
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        }
        mpz_class num = whole * scale + frac;
        if (negative) {
            num = -num;
        }
        return Rational(num, scale);
    }
    return Rational(parse_integer(body, text));
}

long double Rational::to_long_double() const {
    // Split into integer and fractional part to keep precision for large values.
    const mpz_class& num = value_.get_num();
    const mpz_class& den = value_.get_den();
    mpz_class quotient;
    mpz_class remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpq_class frac(remainder, den);
    return static_cast<long double>(quotient.get_d()) + static_cast<long double>(frac.get_d());
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(value_.get_den(), value_.get_num());
}

std::optional<Rational> Rational::exact_cbrt() const {
    mpz_class num_root;
    mpz_class den_root;
    const mpz_class num = value_.get_num();
    const mpz_class den = value_.get_den();
    // mpz_root on a negative operand with odd degree is well defined.
    const bool num_exact = mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), 3) != 0;
    const bool den_exact = mpz_root(den_root.get_mpz_t(), den.get_mpz_t(), 3) != 0;
    if (!num_exact || !den_exact) {
        return std::nullopt;
    }
    return Rational(num_root, den_root);
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) {
        return std::nullopt;
    }
    const mpz_class num = value_.get_num();
    const mpz_class den = value_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class num_root;
    mpz_class den_root;
    mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
    return Rational(num_root, den_root);
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= other.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational factor = base;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= factor;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            factor *= factor;
        }
    }
    return result;
}

Rational best_rational_approximation(double value, std::int64_t max_denominator) {
    if (!std::isfinite(value)) {
        throw std::domain_error("cannot approximate a non-finite value");
    }
    // Exact binary expansion of the double, then continued-fraction convergents.
    const mpq_class target(value);
    mpz_class p0 = 0;
    mpz_class q0 = 1;
    mpz_class p1 = 1;
    mpz_class q1 = 0;
    mpq_class rest = target;
    const mpz_class limit(static_cast<long>(max_denominator));
    while (true) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        const mpz_class q2 = q0 + a * q1;
        if (q2 > limit) {
            // Semiconvergent check: best of the last convergent and the largest
            // admissible semiconvergent.
            const mpz_class k = (limit - q0) / q1;
            const mpq_class semi(p0 + k * p1, q0 + k * q1);
            const mpq_class conv(p1, q1);
            const mpq_class d_semi = ::abs(mpq_class(semi - target));
            const mpq_class d_conv = ::abs(mpq_class(conv - target));
            return d_semi < d_conv ? Rational(semi) : Rational(conv);
        }
        const mpz_class p2 = p0 + a * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const mpq_class frac = rest - mpq_class(a);
        if (sgn(frac) == 0) {
            return Rational(p1, q1);
        }
        rest = 1 / frac;
    }
}

}  // namespace symtensor
