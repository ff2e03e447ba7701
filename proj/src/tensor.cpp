#include "symtensor/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symtensor {

namespace {

bool is_zero_scalar(const Rational& v) { return v.is_zero(); }
bool is_zero_scalar(double v) { return v == 0.0; }
bool is_zero_scalar(long double v) { return v == 0.0L; }
long double to_ld(const Rational& v) { return v.to_long_double(); }
long double to_ld(double v) { return v; }

template <class Scalar>
std::vector<Scalar> transform_dense(const std::vector<Scalar>& t, unsigned n,
                                    const std::vector<Scalar>& p) {
    // Contract each of the three modes with P in turn.
    std::vector<Scalar> cur = t;
    std::vector<Scalar> next(cur.size());
    const auto at = [n](unsigned i, unsigned j, unsigned k) { return (i * n + j) * n + k; };
    for (int mode = 0; mode < 3; ++mode) {
        std::fill(next.begin(), next.end(), Scalar(0));
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                for (unsigned k = 0; k < n; ++k) {
                    const Scalar& v = cur[at(i, j, k)];
                    if (is_zero_scalar(v)) {
                        continue;
                    }
                    // mode 0 contracts i, mode 1 j, mode 2 k.
                    for (unsigned out = 0; out < n; ++out) {
                        unsigned src = mode == 0 ? i : (mode == 1 ? j : k);
                        const Scalar& pe = p[src * n + out];
                        if (is_zero_scalar(pe)) {
                            continue;
                        }
                        const std::size_t dst = mode == 0 ? at(out, j, k)
                                                          : (mode == 1 ? at(i, out, k) : at(i, j, out));
                        next[dst] += v * pe;
                    }
                }
            }
        }
        std::swap(cur, next);
    }
    return cur;
}

}  // namespace

Index3 sorted_index(unsigned i, unsigned j, unsigned k) {
    Index3 idx{i, j, k};
    std::sort(idx.begin(), idx.end());
    return idx;
}

unsigned permutation_count(const Index3& idx) {
    if (idx[0] == idx[2]) {
        return 1;
    }
    if (idx[0] == idx[1] || idx[1] == idx[2]) {
        return 3;
    }
    return 6;
}

template <class Scalar>
BasicSymTensor3<Scalar>::BasicSymTensor3(unsigned dim) : dim_(dim) {
    if (dim == 0) {
        throw std::invalid_argument("tensor dimension must be at least 1");
    }
}

template <class Scalar>
void BasicSymTensor3<Scalar>::check(unsigned i, unsigned j, unsigned k) const {
    if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_) {
        throw std::out_of_range("tensor index out of range");
    }
}

template <class Scalar>
Scalar BasicSymTensor3<Scalar>::at(unsigned i, unsigned j, unsigned k) const {
    check(i, j, k);
    if (auto it = entries_.find(sorted_index(i, j, k)); it != entries_.end()) {
        return it->second;
    }
    return Scalar(0);
}

template <class Scalar>
void BasicSymTensor3<Scalar>::set(unsigned i, unsigned j, unsigned k, Scalar value) {
    check(i, j, k);
    const Index3 idx = sorted_index(i, j, k);
    if (is_zero_scalar(value)) {
        entries_.erase(idx);
    } else {
        entries_[idx] = std::move(value);
    }
}

template <class Scalar>
std::vector<long double> BasicSymTensor3<Scalar>::contract(const std::vector<long double>& x) const {
    if (x.size() != dim_) {
        throw std::invalid_argument("vector length does not match tensor dimension");
    }
    std::vector<long double> out(dim_, 0.0L);
    for (const auto& [idx, value] : entries_) {
        const long double v = to_ld(value);
        const unsigned p = idx[0] - 1;
        const unsigned q = idx[1] - 1;
        const unsigned r = idx[2] - 1;
        // Each distinct ordering (i; j, k) of the triple contributes v x_j x_k to row i.
        if (p == q && q == r) {
            out[p] += v * x[p] * x[p];
        } else if (p == q) {  // (p, p, r), r != p
            out[p] += 2.0L * v * x[p] * x[r];
            out[r] += v * x[p] * x[p];
        } else if (q == r) {  // (p, q, q), p != q
            out[p] += v * x[q] * x[q];
            out[q] += 2.0L * v * x[p] * x[q];
        } else {
            out[p] += 2.0L * v * x[q] * x[r];
            out[q] += 2.0L * v * x[p] * x[r];
            out[r] += 2.0L * v * x[p] * x[q];
        }
    }
    return out;
}

template <class Scalar>
std::vector<Scalar> BasicSymTensor3<Scalar>::dense() const {
    const unsigned n = dim_;
    std::vector<Scalar> out(static_cast<std::size_t>(n) * n * n, Scalar(0));
    for (const auto& [idx, value] : entries_) {
        std::array<unsigned, 3> perm = {idx[0] - 1, idx[1] - 1, idx[2] - 1};
        do {
            out[(perm[0] * n + perm[1]) * n + perm[2]] = value;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

template <class Scalar>
BasicSymTensor3<Scalar> BasicSymTensor3<Scalar>::from_dense(unsigned dim, const std::vector<Scalar>& values) {
    if (values.size() != static_cast<std::size_t>(dim) * dim * dim) {
        throw std::invalid_argument("dense tensor size mismatch");
    }
    BasicSymTensor3 out(dim);
    for (unsigned i = 1; i <= dim; ++i) {
        for (unsigned j = i; j <= dim; ++j) {
            for (unsigned k = j; k <= dim; ++k) {
                out.set(i, j, k, values[((i - 1) * dim + (j - 1)) * dim + (k - 1)]);
            }
        }
    }
    return out;
}

template class BasicSymTensor3<Rational>;
template class BasicSymTensor3<double>;

RealSymTensor3 to_real(const SymTensor3& tensor) {
    RealSymTensor3 out(tensor.dim());
    for (const auto& [idx, value] : tensor.entries()) {
        out.set(idx[0], idx[1], idx[2], value.to_double());
    }
    return out;
}

BinaryCubic BinaryCubic::parse(std::string_view text) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        fields.push_back(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (fields.size() != 4) {
        throw std::invalid_argument("expected four comma-separated coefficients a,b,c,d");
    }
    return {Rational::parse(fields[0]), Rational::parse(fields[1]), Rational::parse(fields[2]),
            Rational::parse(fields[3])};
}

std::string BinaryCubic::to_string() const {
    return a.to_string() + "," + b.to_string() + "," + c.to_string() + "," + d.to_string();
}

void Polynomial::add_term(const Exponents& exponents, const Rational& c) {
    if (exponents.size() != num_vars_) {
        throw std::invalid_argument("exponent vector length does not match variable count");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational Polynomial::coefficient(const Exponents& exponents) const {
    if (auto it = terms_.find(exponents); it != terms_.end()) {
        return it->second;
    }
    return Rational(0);
}

bool Polynomial::is_homogeneous(unsigned degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [degree](const auto& term) {
        unsigned total = 0;
        for (auto e : term.first) {
            total += e;
        }
        return total == degree;
    });
}

Polynomial Polynomial::derivative(unsigned var) const {
    if (var >= num_vars_) {
        throw std::out_of_range("derivative variable out of range");
    }
    Polynomial out(num_vars_);
    for (const auto& [exps, c] : terms_) {
        if (exps[var] == 0) {
            continue;
        }
        Exponents e = exps;
        const long power = e[var];
        e[var] -= 1;
        out.add_term(e, c * Rational(power));
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    auto var_name = [this](unsigned v) -> std::string {
        if (num_vars_ <= 3) {
            return std::string(1, "xyz"[v]);
        }
        return "x" + std::to_string(v + 1);
    };
    std::ostringstream os;
    bool first = true;
    // Descending lexicographic order puts x^3 first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, c] = *it;
        const bool negative = c.sign() < 0;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        const Rational mag = c.abs();
        bool need_star = false;
        if (mag != Rational(1)) {
            os << (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")");
            need_star = true;
        }
        bool any_var = false;
        for (unsigned v = 0; v < num_vars_; ++v) {
            if (exps[v] == 0) {
                continue;
            }
            os << (need_star ? "*" : "") << var_name(v);
            if (exps[v] > 1) {
                os << "^" << exps[v];
            }
            need_star = true;
            any_var = true;
        }
        if (!any_var && mag == Rational(1)) {
            os << "1";
        }
    }
    return os.str();
}

ChangeOfVariables::ChangeOfVariables(RationalMatrix exact) {
    if (!exact.is_square() || exact.rows() == 0) {
        throw std::invalid_argument("change of variables must be a non-empty square matrix");
    }
    if (determinant(exact).is_zero()) {
        throw std::domain_error("change of variables is singular");
    }
    dim_ = static_cast<unsigned>(exact.rows());
    exact_ = true;
    numeric_.reserve(exact.entries().size());
    for (const auto& e : exact.entries()) {
        numeric_.push_back(e.to_double());
    }
    exact_matrix_ = std::move(exact);
}

namespace {

double numeric_determinant(unsigned n, std::vector<double> a) {
    double det = 1.0;
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        for (unsigned r = col + 1; r < n; ++r) {
            if (std::fabs(a[r * n + col]) > std::fabs(a[pivot * n + col])) {
                pivot = r;
            }
        }
        if (a[pivot * n + col] == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            for (unsigned c = 0; c < n; ++c) {
                std::swap(a[col * n + c], a[pivot * n + c]);
            }
            det = -det;
        }
        det *= a[col * n + col];
        for (unsigned r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (unsigned c = col; c < n; ++c) {
                a[r * n + c] -= f * a[col * n + c];
            }
        }
    }
    return det;
}

}  // namespace

ChangeOfVariables::ChangeOfVariables(unsigned dim, std::vector<double> row_major) {
    if (dim == 0 || row_major.size() != static_cast<std::size_t>(dim) * dim) {
        throw std::invalid_argument("change of variables must be a non-empty square matrix");
    }
    if (std::fabs(numeric_determinant(dim, row_major)) < kSingularTolerance) {
        throw std::domain_error("change of variables is singular");
    }
    dim_ = dim;
    exact_ = false;
    numeric_ = std::move(row_major);
}

ChangeOfVariables ChangeOfVariables::identity(unsigned dim) {
    return ChangeOfVariables(RationalMatrix::identity(dim));
}

const RationalMatrix& ChangeOfVariables::exact_matrix() const {
    if (!exact_) {
        throw std::logic_error("change of variables is not exact");
    }
    return exact_matrix_;
}

ChangeOfVariables ChangeOfVariables::compose(const ChangeOfVariables& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("dimension mismatch in composition");
    }
    if (exact_ && rhs.exact_) {
        return ChangeOfVariables(exact_matrix_ * rhs.exact_matrix_);
    }
    std::vector<double> out(static_cast<std::size_t>(dim_) * dim_, 0.0);
    for (unsigned i = 0; i < dim_; ++i) {
        for (unsigned j = 0; j < dim_; ++j) {
            long double acc = 0.0L;
            for (unsigned k = 0; k < dim_; ++k) {
                acc += static_cast<long double>((*this)(i, k)) * rhs(k, j);
            }
            out[i * dim_ + j] = static_cast<double>(acc);
        }
    }
    return ChangeOfVariables(dim_, std::move(out));
}

SymTensor3 cubic_to_tensor(const BinaryCubic& f) {
    SymTensor3 t(2);
    t.set(1, 1, 1, f.a);
    t.set(1, 1, 2, f.b);
    t.set(1, 2, 2, f.c);
    t.set(2, 2, 2, f.d);
    return t;
}

BinaryCubic tensor_to_cubic(const SymTensor3& tensor) {
    if (tensor.dim() != 2) {
        throw std::invalid_argument("binary cubic requires a 2-dimensional tensor");
    }
    return {tensor.at(1, 1, 1), tensor.at(1, 1, 2), tensor.at(1, 2, 2), tensor.at(2, 2, 2)};
}

Polynomial tensor_to_poly(const SymTensor3& tensor) {
    Polynomial f(tensor.dim());
    for (const auto& [idx, value] : tensor.entries()) {
        Polynomial::Exponents e(tensor.dim(), 0);
        for (auto i : idx) {
            e[i - 1] += 1;
        }
        f.add_term(e, value * Rational(static_cast<long>(permutation_count(idx))));
    }
    return f;
}

SymTensor3 poly_to_tensor(const Polynomial& f) {
    if (f.num_vars() == 0) {
        throw std::invalid_argument("polynomial has no variables");
    }
    if (!f.is_homogeneous(3)) {
        throw std::invalid_argument("polynomial is not a homogeneous cubic");
    }
    SymTensor3 t(f.num_vars());
    for (const auto& [exps, c] : f.terms()) {
        std::vector<unsigned> idx;
        for (unsigned v = 0; v < exps.size(); ++v) {
            for (unsigned r = 0; r < exps[v]; ++r) {
                idx.push_back(v + 1);
            }
        }
        const Index3 sorted{idx[0], idx[1], idx[2]};
        t.set(sorted[0], sorted[1], sorted[2], c / Rational(static_cast<long>(permutation_count(sorted))));
    }
    return t;
}

SymTensor3 apply_change(const SymTensor3& tensor, const RationalMatrix& p) {
    if (!p.is_square() || p.rows() != tensor.dim()) {
        throw std::invalid_argument("change of variables dimension does not match tensor");
    }
    if (determinant(p).is_zero()) {
        throw std::domain_error("change of variables is singular");
    }
    const auto dense = transform_dense(tensor.dense(), tensor.dim(), p.entries());
    return SymTensor3::from_dense(tensor.dim(), dense);
}

RealSymTensor3 apply_change(const SymTensor3& tensor, const ChangeOfVariables& p) {
    if (p.dim() != tensor.dim()) {
        throw std::invalid_argument("change of variables dimension does not match tensor");
    }
    if (p.is_exact()) {
        return to_real(apply_change(tensor, p.exact_matrix()));
    }
    const unsigned n = tensor.dim();
    std::vector<long double> t;
    for (const auto& v : tensor.dense()) {
        t.push_back(v.to_long_double());
    }
    std::vector<long double> pl(p.numeric().begin(), p.numeric().end());
    const auto dense = transform_dense(t, n, pl);
    std::vector<double> out(dense.begin(), dense.end());
    return RealSymTensor3::from_dense(n, out);
}

SymTensor3 direct_sum(const SymTensor3& block, unsigned k) {
    SymTensor3 out(block.dim() + k);
    for (const auto& [idx, value] : block.entries()) {
        out.set(idx[0], idx[1], idx[2], value);
    }
    for (unsigned i = block.dim() + 1; i <= block.dim() + k; ++i) {
        out.set(i, i, i, Rational(1));
    }
    return out;
}

SymTensor3 unit_tensor(unsigned n) {
    SymTensor3 out(n);
    for (unsigned i = 1; i <= n; ++i) {
        out.set(i, i, i, Rational(1));
    }
    return out;
}

}  // namespace symtensor
