#include "symtensor/center.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>

namespace symtensor {

AlgebraClass AlgebraClass::product(std::vector<AlgebraFactor> factors) {
    std::sort(factors.begin(), factors.end());
    return {AlgebraTag::ProductList, std::move(factors)};
}

std::vector<AlgebraFactor> AlgebraClass::normalized_factors() const {
    switch (tag) {
        case AlgebraTag::RxR:
            return {AlgebraFactor::R, AlgebraFactor::R};
        case AlgebraTag::C:
            return {AlgebraFactor::C};
        case AlgebraTag::DualNumbers:
            return {AlgebraFactor::DualNumbers};
        case AlgebraTag::ProductList: {
            auto out = factors;
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return {};
}

std::string to_string(AlgebraFactor factor) {
    switch (factor) {
        case AlgebraFactor::C:
            return "C";
        case AlgebraFactor::DualNumbers:
            return "DualNumbers";
        case AlgebraFactor::R:
            return "R";
    }
    return "?";
}

std::string AlgebraClass::to_string() const {
    switch (tag) {
        case AlgebraTag::RxR:
            return "RxR";
        case AlgebraTag::C:
            return "C";
        case AlgebraTag::DualNumbers:
            return "DualNumbers";
        case AlgebraTag::ProductList:
            break;
    }
    std::string out;
    for (const auto f : normalized_factors()) {
        out += (out.empty() ? "" : "×") + symtensor::to_string(f);
    }
    return out;
}

std::string to_string(CanonicalClass cls) {
    switch (cls) {
        case CanonicalClass::Zero:
            return "Zero";
        case CanonicalClass::SingleCube:
            return "SingleCube";
        case CanonicalClass::Fermat:
            return "Fermat";
        case CanonicalClass::TraceForm:
            return "TraceForm";
        case CanonicalClass::Degenerate2:
            return "Degenerate2";
    }
    return "?";
}

BinaryCubic canonical_representative(CanonicalClass cls) {
    switch (cls) {
        case CanonicalClass::Zero:
            return {0, 0, 0, 0};
        case CanonicalClass::SingleCube:
            return {1, 0, 0, 0};
        case CanonicalClass::Fermat:
            return {1, 0, 0, 1};
        case CanonicalClass::TraceForm:
            return {1, 0, -1, 0};
        case CanonicalClass::Degenerate2:
            return {0, 1, 0, 0};
    }
    return {};
}

std::vector<std::vector<Polynomial>> hessian(const Polynomial& f) {
    const unsigned n = f.num_vars();
    std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (unsigned i = 0; i < n; ++i) {
        const Polynomial fi = f.derivative(i);
        for (unsigned k = 0; k < n; ++k) {
            h[i][k] = fi.derivative(k);
        }
    }
    return h;
}

RationalMatrix center_system(const Polynomial& f) {
    if (f.num_vars() == 0 || !f.is_homogeneous(3)) {
        throw std::invalid_argument("center requires a homogeneous cubic");
    }
    const unsigned n = f.num_vars();
    const auto h = hessian(f);
    // Coefficient of x_l in the linear form H_ik.
    auto coeff = [&](unsigned i, unsigned k, unsigned l) {
        Polynomial::Exponents e(n, 0);
        e[l] = 1;
        return h[i][k].coefficient(e);
    };
    const std::size_t equations = static_cast<std::size_t>(n) * (n - 1) / 2 * n;
    RationalMatrix sys(equations, static_cast<std::size_t>(n) * n);
    std::size_t row = 0;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            for (unsigned l = 0; l < n; ++l) {
                // (H X)_ij - (H X)_ji = sum_k H_ik X_kj - H_jk X_ki
                for (unsigned k = 0; k < n; ++k) {
                    sys(row, k * n + j) += coeff(i, k, l);
                    sys(row, k * n + i) -= coeff(j, k, l);
                }
                ++row;
            }
        }
    }
    return sys;
}

CenterAlgebra center(const Polynomial& f) {
    const RationalMatrix sys = center_system(f);
    const unsigned n = f.num_vars();
    CenterAlgebra z{n, {}};
    for (auto& v : nullspace(sys)) {
        z.basis.emplace_back(n, n, std::move(v));
    }
    return z;
}

CenterAlgebra center(const SymTensor3& tensor) { return center(tensor_to_poly(tensor)); }

CenterAlgebra center(const BinaryCubic& f) { return center(cubic_to_tensor(f)); }

bool in_span(const CenterAlgebra& z, const RationalMatrix& x) {
    if (x.rows() != z.n || x.cols() != z.n) {
        return false;
    }
    if (z.basis.empty()) {
        return x.is_zero();
    }
    const std::size_t len = static_cast<std::size_t>(z.n) * z.n;
    RationalMatrix span(z.basis.size(), len);
    RationalMatrix augmented(z.basis.size() + 1, len);
    for (std::size_t b = 0; b < z.basis.size(); ++b) {
        for (std::size_t e = 0; e < len; ++e) {
            span(b, e) = z.basis[b].entries()[e];
            augmented(b, e) = z.basis[b].entries()[e];
        }
    }
    for (std::size_t e = 0; e < len; ++e) {
        augmented(z.basis.size(), e) = x.entries()[e];
    }
    return rank(augmented) == rank(span);
}

namespace {

bool proportional_to_identity(const RationalMatrix& x) {
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (r != c && !x(r, c).is_zero()) {
                return false;
            }
            if (r == c && x(r, c) != x(0, 0)) {
                return false;
            }
        }
    }
    return true;
}

const RationalMatrix& non_scalar_element(const CenterAlgebra& z) {
    for (const auto& x : z.basis) {
        if (!proportional_to_identity(x)) {
            return x;
        }
    }
    throw UnsupportedStructure("center has no non-scalar element");
}

Rational det2(const RationalMatrix& x) { return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0); }

Rational discriminant(const RationalMatrix& x) {
    const Rational tr = x.trace();
    return tr * tr - Rational(4) * det2(x);
}

AlgebraClass classify_two_dimensional(const CenterAlgebra& z) {
    const int s = discriminant(non_scalar_element(z)).sign();
    if (s > 0) {
        return {AlgebraTag::RxR, {}};
    }
    if (s < 0) {
        return {AlgebraTag::C, {}};
    }
    return {AlgebraTag::DualNumbers, {}};
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

AlgebraClass classify_algebra(const CenterAlgebra& z) {
    if (z.n == 2) {
        if (z.dimension() != 2) {
            throw UnsupportedStructure("2x2 center of dimension " + std::to_string(z.dimension()) +
                                       " is not a 2-dimensional algebra");
        }
        return classify_two_dimensional(z);
    }
    // Coordinate blocks: connected components of the support of the basis.
    const std::size_t n = z.n;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& x : z.basis) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (r != c && !x(r, c).is_zero()) {
                    parent[find_root(parent, r)] = find_root(parent, c);
                }
            }
        }
    }
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::optional<std::size_t>> block_of_root(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find_root(parent, i);
        if (!block_of_root[root]) {
            block_of_root[root] = blocks.size();
            blocks.emplace_back();
        }
        blocks[*block_of_root[root]].push_back(i);
    }

    std::vector<AlgebraFactor> factors;
    std::size_t total_dim = 0;
    for (const auto& block : blocks) {
        const std::size_t m = block.size();
        if (m > 2) {
            throw UnsupportedStructure("center block of size " + std::to_string(m) + " is not supported");
        }
        CenterAlgebra projected{static_cast<unsigned>(m), {}};
        RationalMatrix rows(z.dimension(), m * m);
        for (std::size_t b = 0; b < z.dimension(); ++b) {
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < m; ++c) {
                    rows(b, r * m + c) = z.basis[b](block[r], block[c]);
                }
            }
        }
        // Independent projections, in basis order.
        const RowEchelon ech = row_echelon(rows.transpose());
        for (auto pivot : ech.pivots) {
            RationalMatrix x(m, m);
            for (std::size_t e = 0; e < m * m; ++e) {
                x(e / m, e % m) = rows(pivot, e);
            }
            projected.basis.push_back(std::move(x));
        }
        total_dim += projected.dimension();
        if (m == 1) {
            factors.push_back(AlgebraFactor::R);
            continue;
        }
        if (projected.dimension() != 2) {
            throw UnsupportedStructure("2x2 center block of dimension " +
                                       std::to_string(projected.dimension()) + " is not supported");
        }
        switch (classify_two_dimensional(projected).tag) {
            case AlgebraTag::RxR:
                factors.push_back(AlgebraFactor::R);
                factors.push_back(AlgebraFactor::R);
                break;
            case AlgebraTag::C:
                factors.push_back(AlgebraFactor::C);
                break;
            default:
                factors.push_back(AlgebraFactor::DualNumbers);
                break;
        }
    }
    if (total_dim != z.dimension()) {
        throw UnsupportedStructure("center is not the product of its block projections");
    }
    return AlgebraClass::product(std::move(factors));
}

CanonicalClass classify_cubic(const BinaryCubic& f) {
    const CenterAlgebra z = center(f);
    switch (z.dimension()) {
        case 4:
            return CanonicalClass::Zero;
        case 3:
            return CanonicalClass::SingleCube;
        default:
            break;
    }
    switch (classify_algebra(z).tag) {
        case AlgebraTag::RxR:
            return CanonicalClass::Fermat;
        case AlgebraTag::C:
            return CanonicalClass::TraceForm;
        default:
            return CanonicalClass::Degenerate2;
    }
}

namespace {

// 2x2 helpers in row-major (p00, p01, p10, p11).
using Numeric2 = std::array<long double, 4>;

ChangeOfVariables numeric_change(const Numeric2& m) {
    return ChangeOfVariables(2, {static_cast<double>(m[0]), static_cast<double>(m[1]),
                                 static_cast<double>(m[2]), static_cast<double>(m[3])});
}

Numeric2 to_numeric(const RationalMatrix& m) {
    return {m(0, 0).to_long_double(), m(0, 1).to_long_double(), m(1, 0).to_long_double(),
            m(1, 1).to_long_double()};
}

Numeric2 mul(const Numeric2& x, const Numeric2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

// Cubic coefficients (a, b, c, d) of f(P x) for a numeric 2x2 P.
std::array<long double, 4> transformed_coefficients(const BinaryCubic& f, const Numeric2& p) {
    const long double a = f.a.to_long_double();
    const long double b = f.b.to_long_double();
    const long double c = f.c.to_long_double();
    const long double d = f.d.to_long_double();
    // f(x, y) evaluated at (p00 X + p01 Y, p10 X + p11 Y); collect via the
    // tensor transform on each sorted index.
    const long double t[2][2][2] = {{{a, b}, {b, c}}, {{b, c}, {c, d}}};
    auto entry = [&](int j1, int j2, int j3) {
        long double acc = 0.0L;
        for (int i1 = 0; i1 < 2; ++i1) {
            for (int i2 = 0; i2 < 2; ++i2) {
                for (int i3 = 0; i3 < 2; ++i3) {
                    acc += t[i1][i2][i3] * p[i1 * 2 + j1] * p[i2 * 2 + j2] * p[i3 * 2 + j3];
                }
            }
        }
        return acc;
    };
    return {entry(0, 0, 0), entry(0, 0, 1), entry(0, 1, 1), entry(1, 1, 1)};
}

long double real_cbrt(long double v) { return std::cbrt(v); }

// P with f(P x) = x^3 for f = a(x + alpha y)^3, or the mirrored d y^3 case.
ChangeOfVariables single_cube_transform(const BinaryCubic& f) {
    if (!f.a.is_zero()) {
        const Rational alpha = f.b / f.a;
        const Rational inv_a = f.a.inverse();
        if (auto root = inv_a.exact_cbrt()) {
            return ChangeOfVariables(RationalMatrix{{*root, -alpha}, {0, 1}});
        }
        return numeric_change({real_cbrt(inv_a.to_long_double()), -alpha.to_long_double(), 0.0L, 1.0L});
    }
    // a = b = c = 0: f = d y^3.
    const Rational inv_d = f.d.inverse();
    if (auto root = inv_d.exact_cbrt()) {
        return ChangeOfVariables(RationalMatrix{{0, 1}, {*root, 0}});
    }
    return numeric_change({0.0L, 1.0L, real_cbrt(inv_d.to_long_double()), 0.0L});
}

ChangeOfVariables fermat_transform(const BinaryCubic& f, const RationalMatrix& x) {
    const Rational tr = x.trace();
    const Rational delta = discriminant(x);
    const Rational p = x(0, 0);
    const Rational q = x(0, 1);
    const Rational r = x(1, 0);
    const Rational s = x(1, 1);
    auto scale_columns = [&](const std::array<long double, 4>& g, const Numeric2& base) {
        const long double sx = real_cbrt(1.0L / g[0]);
        const long double sy = real_cbrt(1.0L / g[3]);
        return numeric_change(mul(base, {sx, 0.0L, 0.0L, sy}));
    };
    if (auto root = delta.exact_sqrt()) {
        const Rational mu1 = (tr + *root) / Rational(2);
        const Rational mu2 = (tr - *root) / Rational(2);
        RationalMatrix basis(2, 2);
        if (!q.is_zero()) {
            basis = RationalMatrix{{q, q}, {mu1 - p, mu2 - p}};
        } else if (!r.is_zero()) {
            basis = RationalMatrix{{mu1 - s, mu2 - s}, {r, r}};
        } else {
            basis = RationalMatrix::identity(2);
        }
        const SymTensor3 g = apply_change(cubic_to_tensor(f), basis);
        const Rational ga = g.at(1, 1, 1);
        const Rational gd = g.at(2, 2, 2);
        const auto ra = ga.inverse().exact_cbrt();
        const auto rd = gd.inverse().exact_cbrt();
        if (ra && rd) {
            return ChangeOfVariables(basis * RationalMatrix{{*ra, 0}, {0, *rd}});
        }
        return scale_columns({ga.to_long_double(), 0, 0, gd.to_long_double()}, to_numeric(basis));
    }
    const long double sq = std::sqrt(delta.to_long_double());
    const long double trl = tr.to_long_double();
    const long double mu1 = (trl + sq) / 2.0L;
    const long double mu2 = (trl - sq) / 2.0L;
    Numeric2 basis{};
    if (!q.is_zero()) {
        const long double ql = q.to_long_double();
        const long double pl = p.to_long_double();
        basis = {ql, ql, mu1 - pl, mu2 - pl};
    } else {
        const long double rl = r.to_long_double();
        const long double sl = s.to_long_double();
        basis = {mu1 - sl, mu2 - sl, rl, rl};
    }
    for (int col = 0; col < 2; ++col) {
        const long double norm = std::hypot(basis[col], basis[2 + col]);
        basis[col] /= norm;
        basis[2 + col] /= norm;
    }
    return scale_columns(transformed_coefficients(f, basis), basis);
}

ChangeOfVariables trace_form_transform(const BinaryCubic& f, const RationalMatrix& x) {
    const Rational alpha = x.trace() / Rational(2);
    const Rational beta_sq = -discriminant(x) / Rational(4);
    // J = (X - alpha I) / beta squares to -I; columns e1, J e1.
    const Rational jx = x(0, 0) - alpha;
    const Rational jy = x(1, 0);
    std::optional<RationalMatrix> exact_basis;
    Numeric2 basis{};
    std::array<long double, 4> g{};
    if (auto beta = beta_sq.exact_sqrt()) {
        exact_basis = RationalMatrix{{1, jx / *beta}, {0, jy / *beta}};
        const SymTensor3 gt = apply_change(cubic_to_tensor(f), *exact_basis);
        const BinaryCubic gc = tensor_to_cubic(gt);
        // Exact complex cube roots only on the axes.
        std::optional<std::pair<Rational, Rational>> uv;
        if (gc.b.is_zero()) {
            if (auto u = gc.a.exact_cbrt()) {
                uv = {*u, Rational(0)};
            }
        } else if (gc.a.is_zero()) {
            if (auto w = gc.b.exact_cbrt()) {
                uv = {Rational(0), -*w};
            }
        }
        if (uv) {
            const auto& [u, v] = *uv;
            const Rational norm = u * u + v * v;
            const RationalMatrix m_inv{{u / norm, -v / norm}, {v / norm, u / norm}};
            return ChangeOfVariables(*exact_basis * m_inv);
        }
        basis = to_numeric(*exact_basis);
        g = {gc.a.to_long_double(), gc.b.to_long_double(), gc.c.to_long_double(), gc.d.to_long_double()};
    } else {
        const long double beta_f = std::sqrt(beta_sq.to_long_double());
        basis = {1.0L, jx.to_long_double() / beta_f, 0.0L, jy.to_long_double() / beta_f};
        g = transformed_coefficients(f, basis);
    }
    // g = a' x^3 + 3b' x^2 y - 3a' x y^2 - b' y^3 = Re[(a' + b' i)(x - i y)^3].
    const std::complex<long double> w(g[0], g[1]);
    const long double radius = std::cbrt(std::abs(w));
    const long double theta = std::arg(w) / 3.0L;
    const long double u = radius * std::cos(theta);
    const long double v = radius * std::sin(theta);
    // g(x) = h(M x) with M = [[u, v], [-v, u]] and h = x^3 - 3xy^2.
    const long double norm = u * u + v * v;
    const Numeric2 m_inv{u / norm, -v / norm, v / norm, u / norm};
    return numeric_change(mul(basis, m_inv));
}

ChangeOfVariables degenerate2_transform(const BinaryCubic& f, const RationalMatrix& x) {
    const Rational mu = x.trace() / Rational(2);
    const RationalMatrix nil = x - RationalMatrix::identity(2) * mu;
    RationalVector p1{1, 0};
    if ((nil * p1)[0].is_zero() && (nil * p1)[1].is_zero()) {
        p1 = {0, 1};
    }
    const RationalVector p2 = nil * p1;
    const RationalMatrix basis{{p1[0], p2[0]}, {p1[1], p2[1]}};
    // f(basis x) = a' x^3 + 3b' x^2 y with b' != 0.
    const BinaryCubic g = tensor_to_cubic(apply_change(cubic_to_tensor(f), basis));
    const RationalMatrix shear{{1, 0}, {-g.a / (Rational(3) * g.b), g.b.inverse()}};
    return ChangeOfVariables(basis * shear);
}

}  // namespace

CanonicalTransform canonical_transform(const BinaryCubic& f) {
    if (f.is_zero()) {
        throw std::invalid_argument("canonical transform of the zero cubic");
    }
    const CanonicalClass cls = classify_cubic(f);
    if (f == canonical_representative(cls)) {
        return {cls, ChangeOfVariables::identity(2)};
    }
    switch (cls) {
        case CanonicalClass::SingleCube:
            return {cls, single_cube_transform(f)};
        case CanonicalClass::Fermat:
            return {cls, fermat_transform(f, non_scalar_element(center(f)))};
        case CanonicalClass::TraceForm:
            return {cls, trace_form_transform(f, non_scalar_element(center(f)))};
        case CanonicalClass::Degenerate2:
            return {cls, degenerate2_transform(f, non_scalar_element(center(f)))};
        case CanonicalClass::Zero:
            break;
    }
    throw std::logic_error("unreachable canonical class");
}

bool are_equivalent(const BinaryCubic& f, const BinaryCubic& g) {
    return classify_cubic(f) == classify_cubic(g);
}

DirectSumCenter center_of_direct_sum(const BinaryCubic& block, unsigned k) {
    if (center(block).dimension() != 2) {
        throw DegenerateInput("direct-sum center requires a nondegenerate binary cubic");
    }
    CenterAlgebra z = center(direct_sum(cubic_to_tensor(block), k));
    AlgebraClass cls = classify_algebra(z);
    return {std::move(z), std::move(cls)};
}

}  // namespace symtensor
