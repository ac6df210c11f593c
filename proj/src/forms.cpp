#include "cubicrank/forms.hpp"

#include <cassert>
#include <utility>

namespace cubicrank {

namespace {

template <typename FormT, std::size_t N>
bool all_zero(const FormT& f) {
    for (std::size_t i = 0; i < N; ++i)
        if (!f[i].is_zero()) return false;
    return true;
}

// Shared proportionality test over a fixed coefficient count.
template <typename FormT, std::size_t N>
std::optional<Scalar> proportional_impl(const FormT& f, const FormT& g) {
    bool fz = all_zero<FormT, N>(f), gz = all_zero<FormT, N>(g);
    if (fz && gz) return Scalar(1);
    if (fz || gz) return std::nullopt;
    std::size_t k = 0;
    while (g[k].is_zero()) ++k;
    Scalar s = f[k] / g[k];
    if (s.is_zero()) return std::nullopt;
    for (std::size_t i = 0; i < N; ++i)
        if (f[i] != s * g[i]) return std::nullopt;
    return s;
}

} // namespace

LinearForm LinearForm::normalized() const {
    assert(!is_zero());
    Scalar lead = !a.is_zero() ? a : (!b.is_zero() ? b : c);
    return scaled(lead.inverse());
}

std::optional<Scalar> proportional(const LinearForm& l, const LinearForm& m) {
    struct View {
        const LinearForm& f;
        const Scalar& operator[](std::size_t i) const {
            return i == 0 ? f.a : (i == 1 ? f.b : f.c);
        }
    };
    return proportional_impl<View, 3>(View{l}, View{m});
}

ProjectivePoint::ProjectivePoint(Scalar x, Scalar y, Scalar z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
    Scalar lead =
        !x_.is_zero() ? x_ : (!y_.is_zero() ? y_ : z_);
    if (lead.is_zero())
        throw std::invalid_argument("projective point needs a nonzero coordinate");
    Scalar inv = lead.inverse();
    x_ *= inv;
    y_ *= inv;
    z_ *= inv;
}

bool TernaryQuadratic::is_zero() const {
    return all_zero<TernaryQuadratic, 6>(*this);
}

TernaryQuadratic TernaryQuadratic::scaled(const Scalar& s) const {
    std::array<Scalar, 6> d;
    for (std::size_t i = 0; i < 6; ++i) d[i] = c_[i] * s;
    return TernaryQuadratic(std::move(d));
}

Scalar TernaryQuadratic::eval(const Scalar& x, const Scalar& y,
                              const Scalar& z) const {
    using namespace mon;
    return c_[x2] * x * x + c_[xy] * x * y + c_[xz] * x * z + c_[y2] * y * y +
           c_[yz] * y * z + c_[z2] * z * z;
}

TernaryQuadratic operator+(const TernaryQuadratic& f,
                           const TernaryQuadratic& g) {
    std::array<Scalar, 6> d;
    for (std::size_t i = 0; i < 6; ++i) d[i] = f[i] + g[i];
    return TernaryQuadratic(std::move(d));
}

TernaryQuadratic operator-(const TernaryQuadratic& f,
                           const TernaryQuadratic& g) {
    std::array<Scalar, 6> d;
    for (std::size_t i = 0; i < 6; ++i) d[i] = f[i] - g[i];
    return TernaryQuadratic(std::move(d));
}

bool TernaryCubic::is_zero() const { return all_zero<TernaryCubic, 10>(*this); }

TernaryCubic TernaryCubic::scaled(const Scalar& s) const {
    std::array<Scalar, 10> d;
    for (std::size_t i = 0; i < 10; ++i) d[i] = c_[i] * s;
    return TernaryCubic(std::move(d));
}

Scalar TernaryCubic::eval(const Scalar& x, const Scalar& y,
                          const Scalar& z) const {
    using namespace mon;
    return c_[x3] * x * x * x + c_[x2y] * x * x * y + c_[x2z] * x * x * z +
           c_[xy2] * x * y * y + c_[xyz] * x * y * z + c_[xz2] * x * z * z +
           c_[y3] * y * y * y + c_[y2z] * y * y * z + c_[yz2] * y * z * z +
           c_[z3] * z * z * z;
}

TernaryCubic operator+(const TernaryCubic& f, const TernaryCubic& g) {
    std::array<Scalar, 10> d;
    for (std::size_t i = 0; i < 10; ++i) d[i] = f[i] + g[i];
    return TernaryCubic(std::move(d));
}

TernaryCubic operator-(const TernaryCubic& f, const TernaryCubic& g) {
    std::array<Scalar, 10> d;
    for (std::size_t i = 0; i < 10; ++i) d[i] = f[i] - g[i];
    return TernaryCubic(std::move(d));
}

bool BinaryQuadratic::is_zero() const {
    return all_zero<BinaryQuadratic, 3>(*this);
}

Scalar BinaryQuadratic::eval(const Scalar& u, const Scalar& v) const {
    return c_[0] * u * u + c_[1] * u * v + c_[2] * v * v;
}

bool BinaryCubic::is_zero() const { return all_zero<BinaryCubic, 4>(*this); }

BinaryCubic BinaryCubic::scaled(const Scalar& s) const {
    std::array<Scalar, 4> d;
    for (std::size_t i = 0; i < 4; ++i) d[i] = c_[i] * s;
    return BinaryCubic(std::move(d));
}

Scalar BinaryCubic::eval(const Scalar& u, const Scalar& v) const {
    return c_[0] * u * u * u + c_[1] * u * u * v + c_[2] * u * v * v +
           c_[3] * v * v * v;
}

BinaryCubic operator+(const BinaryCubic& f, const BinaryCubic& g) {
    std::array<Scalar, 4> d;
    for (std::size_t i = 0; i < 4; ++i) d[i] = f[i] + g[i];
    return BinaryCubic(std::move(d));
}

BinaryCubic operator-(const BinaryCubic& f, const BinaryCubic& g) {
    std::array<Scalar, 4> d;
    for (std::size_t i = 0; i < 4; ++i) d[i] = f[i] - g[i];
    return BinaryCubic(std::move(d));
}

Decomposition::Decomposition(std::vector<Term> terms, TernaryCubic target)
    : terms_(std::move(terms)), target_(std::move(target)) {
    if (!(expand_cubes(terms_) == target_)) throw DecompositionMismatch();
}

BinaryDecomposition::BinaryDecomposition(std::vector<BinaryTerm> terms,
                                         BinaryCubic target)
    : terms_(std::move(terms)), target_(std::move(target)) {
    if (!(expand_binary_cubes(terms_) == target_))
        throw DecompositionMismatch();
}

TernaryQuadratic partial(const TernaryCubic& f, Var v) {
    using namespace mon;
    Scalar two(2), three(3);
    switch (v) {
    case Var::X:
        return TernaryQuadratic({three * f[x3], two * f[x2y], two * f[x2z],
                                 f[xy2], f[xyz], f[xz2]});
    case Var::Y:
        return TernaryQuadratic({f[x2y], two * f[xy2], f[xyz], three * f[y3],
                                 two * f[y2z], f[yz2]});
    default:
        return TernaryQuadratic({f[x2z], f[xyz], two * f[xz2], f[y2z],
                                 two * f[yz2], three * f[z3]});
    }
}

TernaryQuadratic mul_ll(const LinearForm& l, const LinearForm& m) {
    return TernaryQuadratic({l.a * m.a, l.a * m.b + l.b * m.a,
                             l.a * m.c + l.c * m.a, l.b * m.b,
                             l.b * m.c + l.c * m.b, l.c * m.c});
}

TernaryCubic mul_ql(const TernaryQuadratic& q, const LinearForm& l) {
    using namespace mon;
    return TernaryCubic({q[x2] * l.a,
                         q[x2] * l.b + q[xy] * l.a,
                         q[x2] * l.c + q[xz] * l.a,
                         q[xy] * l.b + q[y2] * l.a,
                         q[xy] * l.c + q[xz] * l.b + q[yz] * l.a,
                         q[xz] * l.c + q[z2] * l.a,
                         q[y2] * l.b,
                         q[y2] * l.c + q[yz] * l.b,
                         q[yz] * l.c + q[z2] * l.b,
                         q[z2] * l.c});
}

TernaryCubic cube(const LinearForm& l) { return mul_ql(mul_ll(l, l), l); }

std::optional<TernaryQuadratic> divide_by_linear(const TernaryCubic& f,
                                                 const LinearForm& l) {
    if (l.is_zero()) return std::nullopt;
    // The multiplication-by-l map from quadratics to cubics is linear and
    // injective; solve for the preimage of f.
    Matrix m(10, 6);
    for (std::size_t j = 0; j < 6; ++j) {
        std::array<Scalar, 6> e{};
        e[j] = Scalar(1);
        TernaryCubic col = mul_ql(TernaryQuadratic(std::move(e)), l);
        for (std::size_t i = 0; i < 10; ++i) m.at(i, j) = col[i];
    }
    Vec rhs(10);
    for (std::size_t i = 0; i < 10; ++i) rhs[i] = f[i];
    SolveResult r = solve(m, rhs);
    if (r.kind != SolveKind::Unique) return std::nullopt;
    std::array<Scalar, 6> q;
    for (std::size_t i = 0; i < 6; ++i) q[i] = r.particular[i];
    return TernaryQuadratic(std::move(q));
}

TernaryCubic expand_cubes(const std::vector<Term>& terms) {
    TernaryCubic acc;
    for (const Term& t : terms) acc = acc + cube(t.form).scaled(t.coeff);
    return acc;
}

BinaryCubic binary_cube(const BinaryLinear& l) {
    Scalar three(3);
    return BinaryCubic({l.u * l.u * l.u, three * l.u * l.u * l.v,
                        three * l.u * l.v * l.v, l.v * l.v * l.v});
}

BinaryCubic expand_binary_cubes(const std::vector<BinaryTerm>& terms) {
    BinaryCubic acc;
    for (const BinaryTerm& t : terms)
        acc = acc + binary_cube(t.form).scaled(t.coeff);
    return acc;
}

TernaryCubic substitute_linear(const TernaryCubic& f, const Matrix& m) {
    assert(m.rows() == 3 && m.cols() == 3);
    using namespace mon;
    LinearForm rx{m.at(0, 0), m.at(0, 1), m.at(0, 2)};
    LinearForm ry{m.at(1, 0), m.at(1, 1), m.at(1, 2)};
    LinearForm rz{m.at(2, 0), m.at(2, 1), m.at(2, 2)};
    // Each monomial is a product of three of the substituted lines.
    struct Entry {
        std::size_t idx;
        const LinearForm *p, *q, *r;
    };
    const Entry table[] = {
        {x3, &rx, &rx, &rx},  {x2y, &rx, &rx, &ry}, {x2z, &rx, &rx, &rz},
        {xy2, &rx, &ry, &ry}, {xyz, &rx, &ry, &rz}, {xz2, &rx, &rz, &rz},
        {y3, &ry, &ry, &ry},  {y2z, &ry, &ry, &rz}, {yz2, &ry, &rz, &rz},
        {z3, &rz, &rz, &rz},
    };
    TernaryCubic acc;
    for (const Entry& e : table) {
        if (f[e.idx].is_zero()) continue;
        acc = acc + mul_ql(mul_ll(*e.p, *e.q), *e.r).scaled(f[e.idx]);
    }
    return acc;
}

TernaryQuadratic substitute_linear(const TernaryQuadratic& q, const Matrix& m) {
    assert(m.rows() == 3 && m.cols() == 3);
    using namespace mon;
    LinearForm rx{m.at(0, 0), m.at(0, 1), m.at(0, 2)};
    LinearForm ry{m.at(1, 0), m.at(1, 1), m.at(1, 2)};
    LinearForm rz{m.at(2, 0), m.at(2, 1), m.at(2, 2)};
    struct Entry {
        std::size_t idx;
        const LinearForm *p, *q;
    };
    const Entry table[] = {
        {x2, &rx, &rx}, {xy, &rx, &ry}, {xz, &rx, &rz},
        {y2, &ry, &ry}, {yz, &ry, &rz}, {z2, &rz, &rz},
    };
    TernaryQuadratic acc;
    for (const Entry& e : table) {
        if (q[e.idx].is_zero()) continue;
        TernaryQuadratic prod = mul_ll(*e.p, *e.q);
        acc = acc + prod.scaled(q[e.idx]);
    }
    return acc;
}

BinaryCubic substitute_linear(const BinaryCubic& f, const Matrix& m) {
    assert(m.rows() == 2 && m.cols() == 2);
    BinaryLinear ru{m.at(0, 0), m.at(0, 1)};
    BinaryLinear rv{m.at(1, 0), m.at(1, 1)};
    auto mul = [](const BinaryLinear& a, const BinaryLinear& b,
                  const BinaryLinear& c) {
        std::array<Scalar, 4> d{};
        const Scalar* av[2] = {&a.u, &a.v};
        const Scalar* bv[2] = {&b.u, &b.v};
        const Scalar* cv[2] = {&c.u, &c.v};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    d[static_cast<std::size_t>(i + j + k)] +=
                        *av[i] * *bv[j] * *cv[k];
        return BinaryCubic(std::move(d));
    };
    BinaryCubic acc;
    const BinaryLinear* rows[2] = {&ru, &rv};
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j)
            for (int k = j; k < 2; ++k) {
                std::size_t idx = static_cast<std::size_t>(i + j + k);
                if (f[idx].is_zero()) continue;
                // Each monomial index appears once in the ordered loop.
                acc = acc + mul(*rows[i], *rows[j], *rows[k]).scaled(f[idx]);
            }
    return acc;
}

std::optional<Scalar> proportional(const TernaryCubic& f,
                                   const TernaryCubic& g) {
    return proportional_impl<TernaryCubic, 10>(f, g);
}

std::optional<Scalar> proportional(const TernaryQuadratic& f,
                                   const TernaryQuadratic& g) {
    return proportional_impl<TernaryQuadratic, 6>(f, g);
}

std::optional<Scalar> proportional(const BinaryCubic& f, const BinaryCubic& g) {
    return proportional_impl<BinaryCubic, 4>(f, g);
}

} // namespace cubicrank
