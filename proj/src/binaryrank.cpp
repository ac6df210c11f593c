#include "cubicrank/binaryrank.hpp"

#include <cassert>
#include <optional>
#include <vector>

#include "cubicrank/unipoly.hpp"

namespace cubicrank {

Scalar binary_discriminant(const BinaryCubic& f) {
    Scalar a = f.A(), b = f.B(), c = f.C(), d = f.D();
    Scalar ad_bc = a * d - b * c;
    return ad_bc * ad_bc -
           Scalar(4) * (b * d - c * c) * (a * c - b * b);
}

Matrix binary_catalecticant(const BinaryCubic& f) {
    return Matrix(2, 3,
                  {f.A(), f.B(), f.C(),
                   f.B(), f.C(), f.D()});
}

BinaryClassification binary_real_rank(const BinaryCubic& f) {
    if (f.is_zero()) throw ZeroForm();
    std::size_t cr = rank(binary_catalecticant(f));
    Scalar disc = binary_discriminant(f);
    if (cr == 1) return {1, cr, disc, BinaryOrbit::PerfectCube};
    int s = disc.sign();
    if (s > 0) return {2, cr, disc, BinaryOrbit::GenericPositive};
    if (s < 0) return {3, cr, disc, BinaryOrbit::GenericNegative};
    return {3, cr, disc, BinaryOrbit::TangentSurface};
}

namespace {

// Exact quotient f / l, if l divides f.
std::optional<BinaryQuadratic> divide_binary(const BinaryCubic& f,
                                             const BinaryLinear& l) {
    assert(!l.is_zero());
    std::array<Scalar, 3> g;
    if (!l.u.is_zero()) {
        g[0] = f[0] / l.u;
        g[1] = (f[1] - l.v * g[0]) / l.u;
        g[2] = (f[2] - l.v * g[1]) / l.u;
        if (l.v * g[2] != f[3]) return std::nullopt;
    } else {
        if (!f[0].is_zero()) return std::nullopt;
        g[0] = f[1] / l.v;
        g[1] = f[2] / l.v;
        g[2] = f[3] / l.v;
    }
    return BinaryQuadratic(std::move(g));
}

std::optional<BinaryLinear> divide_binary(const BinaryQuadratic& q,
                                          const BinaryLinear& l) {
    assert(!l.is_zero());
    Scalar h0, h1;
    if (!l.u.is_zero()) {
        h0 = q[0] / l.u;
        h1 = (q[1] - l.v * h0) / l.u;
        if (l.v * h1 != q[2]) return std::nullopt;
    } else {
        if (!q[0].is_zero()) return std::nullopt;
        h0 = q[1] / l.v;
        h1 = q[2] / l.v;
    }
    return BinaryLinear{h0, h1};
}

// Coefficients lambda with f = sum lambda_j forms_j^3 (unique for
// independent cubes).
std::vector<Scalar> solve_cube_coefficients(
    const BinaryCubic& f, const std::vector<BinaryLinear>& forms) {
    Matrix a(4, forms.size());
    for (std::size_t j = 0; j < forms.size(); ++j) {
        BinaryCubic cb = binary_cube(forms[j]);
        for (std::size_t i = 0; i < 4; ++i) a.at(i, j) = cb[i];
    }
    Vec b{f[0], f[1], f[2], f[3]};
    SolveResult sol = solve(a, b);
    assert(sol.kind == SolveKind::Unique);
    return sol.particular;
}

BinaryDecomposition decompose_cube(const BinaryCubic& f) {
    using namespace mon;
    BinaryLinear l{Scalar(1), Scalar(0)};
    Scalar coeff = f[u3];
    if (f[u3].is_zero()) {
        l = BinaryLinear{Scalar(0), Scalar(1)};
        coeff = f[v3];
    } else {
        l.v = f[u2v] / (Scalar(3) * f[u3]);
    }
    return BinaryDecomposition({{coeff, l}}, f);
}

BinaryDecomposition decompose_sylvester(const BinaryCubic& f) {
    auto ker = kernel(binary_catalecticant(f));
    assert(ker.size() == 1);
    const Vec& h = ker[0];  // apolar quadratic h0 + h1 t + h2 t^2

    std::vector<BinaryLinear> forms;
    if (!h[2].is_zero()) {
        QuadraticRoots qr = solve_quadratic(h[2], h[1], h[0]);
        if (qr.status != QuadraticRoots::Status::RealPair)
            throw UnsupportedAlgebraicDegree(2);
        forms.push_back({Scalar(1), qr.first});
        forms.push_back({Scalar(1), qr.second});
    } else {
        // One root plus the root at infinity, i.e. the form v itself.
        assert(!h[1].is_zero());
        forms.push_back({Scalar(1), -h[0] / h[1]});
        forms.push_back({Scalar(0), Scalar(1)});
    }

    std::vector<Scalar> lambda = solve_cube_coefficients(f, forms);
    return BinaryDecomposition({{lambda[0], forms[0]}, {lambda[1], forms[1]}},
                               f);
}

// m^2 n = 1/6 (n+m)^3 + 1/6 (n-m)^3 - 1/3 n^3 for any linear m, n.
std::vector<BinaryTerm> square_times_linear(const BinaryLinear& m,
                                            const BinaryLinear& n) {
    Scalar sixth(Rational(1, 6));
    return {{sixth, {n.u + m.u, n.v + m.v}},
            {sixth, {n.u - m.u, n.v - m.v}},
            {Scalar(Rational(-1, 3)), n}};
}

BinaryDecomposition decompose_double_root(const BinaryCubic& f) {
    using namespace mon;
    BinaryLinear m1, m2;
    if (f[u3].is_zero() && f[u2v].is_zero()) {
        // f = v^2 (c uv^2-coefficient absorbed into the simple factor).
        m1 = BinaryLinear{Scalar(0), Scalar(1)};
        m2 = BinaryLinear{f[uv2], f[v3]};
    } else {
        // The double root divides both partial derivatives.
        UPoly pu(std::vector<Scalar>{f[uv2], Scalar(2) * f[u2v],
                                     Scalar(3) * f[u3]});
        UPoly pv(std::vector<Scalar>{Scalar(3) * f[v3], Scalar(2) * f[uv2],
                                     f[u2v]});
        UPoly g = poly_gcd(pu, pv);
        assert(g.degree() == 1);
        Scalar t = -g.coeff(0);  // g is monic
        m1 = BinaryLinear{Scalar(1), -t};
        auto q = divide_binary(f, m1);
        assert(q.has_value());
        auto lin = divide_binary(*q, m1);
        assert(lin.has_value());
        m2 = *lin;
    }
    return BinaryDecomposition(square_times_linear(m1, m2), f);
}

BinaryDecomposition decompose_three_roots(const BinaryCubic& f) {
    using namespace mon;
    // Roots t of f(t, 1); the root at infinity is the line v.
    UPoly ft(std::vector<Scalar>{f[v3], f[uv2], f[u2v], f[u3]});
    TowerRoots tr = tower_roots(ft);

    std::optional<Scalar> best;
    for (const Scalar& t : tr.roots) {
        if (!best) {
            best = t;
            continue;
        }
        Scalar at = t.sign() < 0 ? -t : t;
        Scalar ab = best->sign() < 0 ? -*best : *best;
        if (at < ab || (at == ab && best->sign() < 0)) best = t;
    }

    BinaryLinear l, m;
    Scalar alpha, beta, gamma;
    if (best) {
        Scalar t = *best;
        l = BinaryLinear{Scalar(1), -t};
        m = BinaryLinear{Scalar(0), Scalar(1)};
        auto q = divide_binary(f, l);
        assert(q.has_value());
        // f/l in the basis (l, m): substitute u = l + t m, v = m.
        alpha = (*q)[0];
        beta = Scalar(2) * (*q)[0] * t + (*q)[1];
        gamma = q->eval(t, Scalar(1));
    } else if (f[u3].is_zero()) {
        l = BinaryLinear{Scalar(0), Scalar(1)};
        m = BinaryLinear{Scalar(1), Scalar(0)};
        auto q = divide_binary(f, l);
        assert(q.has_value());
        alpha = (*q)[2];
        beta = (*q)[1];
        gamma = (*q)[0];
    } else {
        // Irreducible with three real roots: every root generates a cubic
        // field.
        throw UnsupportedAlgebraicDegree(3);
    }

    // Distinct roots keep the complementary direction off the line.
    assert(!gamma.is_zero());
    Scalar shift = beta / (Scalar(2) * gamma);
    BinaryLinear w{m.u + shift * l.u, m.v + shift * l.v};
    Scalar delta = alpha - beta * beta / (Scalar(4) * gamma);

    // f = delta l^3 + gamma l w^2, then rewrite l w^2 as three cubes and
    // merge the l^3 contributions.
    Scalar sixth = gamma / Scalar(6);
    std::vector<BinaryTerm> terms{
        {delta - gamma / Scalar(3), l},
        {sixth, {l.u + w.u, l.v + w.v}},
        {sixth, {l.u - w.u, l.v - w.v}}};
    return BinaryDecomposition(std::move(terms), f);
}

} // namespace

BinaryDecomposition binary_decompose(const BinaryCubic& f) {
    BinaryClassification c = binary_real_rank(f);
    switch (c.orbit) {
    case BinaryOrbit::PerfectCube:
        return decompose_cube(f);
    case BinaryOrbit::GenericPositive:
        return decompose_sylvester(f);
    case BinaryOrbit::TangentSurface:
        return decompose_double_root(f);
    case BinaryOrbit::GenericNegative:
    default:
        return decompose_three_roots(f);
    }
}

} // namespace cubicrank
