#include "cubicrank/covariants.hpp"

#include <cassert>

#include "cubicrank/aronhold_tables.hpp"
#include "cubicrank/unipoly.hpp"

namespace cubicrank {

Matrix gram_of(const TernaryQuadratic& q) {
    using namespace mon;
    Scalar half(Rational(1, 2));
    Matrix g(3, 3);
    g.at(0, 0) = q[x2];
    g.at(1, 1) = q[y2];
    g.at(2, 2) = q[z2];
    g.at(0, 1) = g.at(1, 0) = q[xy] * half;
    g.at(0, 2) = g.at(2, 0) = q[xz] * half;
    g.at(1, 2) = g.at(2, 1) = q[yz] * half;
    return g;
}

TernaryQuadratic quadratic_of(const Matrix& gram) {
    assert(gram.rows() == 3 && gram.cols() == 3);
    Scalar two(2);
    return TernaryQuadratic({gram.at(0, 0), two * gram.at(0, 1),
                             two * gram.at(0, 2), gram.at(1, 1),
                             two * gram.at(1, 2), gram.at(2, 2)});
}

TernaryCubic hessian(const TernaryCubic& f) {
    using namespace mon;
    Scalar two(2), six(6);
    // Rows of the second-partials matrix, each a linear form.
    LinearForm fxx{six * f[x3], two * f[x2y], two * f[x2z]};
    LinearForm fxy{two * f[x2y], two * f[xy2], f[xyz]};
    LinearForm fxz{two * f[x2z], f[xyz], two * f[xz2]};
    LinearForm fyy{two * f[xy2], six * f[y3], two * f[y2z]};
    LinearForm fyz{f[xyz], two * f[y2z], two * f[yz2]};
    LinearForm fzz{two * f[xz2], two * f[yz2], six * f[z3]};

    TernaryCubic det =
        mul_ql(mul_ll(fyy, fzz) - mul_ll(fyz, fyz), fxx) -
        mul_ql(mul_ll(fxy, fzz) - mul_ll(fyz, fxz), fxy) +
        mul_ql(mul_ll(fxy, fyz) - mul_ll(fyy, fxz), fxz);
    return det;
}

PolarConic polar_conic(const TernaryCubic& f, const ProjectivePoint& y) {
    TernaryQuadratic q = partial(f, Var::X).scaled(y.x()) +
                         partial(f, Var::Y).scaled(y.y()) +
                         partial(f, Var::Z).scaled(y.z());
    return PolarConic{gram_of(q)};
}

ConicSingularity conic_singular_point(const TernaryQuadratic& q) {
    if (q.is_zero()) throw ZeroConic();
    Matrix g = gram_of(q);
    auto basis = kernel(g);
    if (basis.empty()) throw NonsingularConic();
    if (basis.size() == 1)
        return ProjectivePoint(basis[0][0], basis[0][1], basis[0][2]);
    // Rank 1: the singular locus is the repeated line itself; recover its
    // equation as the cross product of two kernel points.
    const Vec& p = basis[0];
    const Vec& r = basis[1];
    LinearForm line{p[1] * r[2] - p[2] * r[1], p[2] * r[0] - p[0] * r[2],
                    p[0] * r[1] - p[1] * r[0]};
    return line.normalized();
}

ConicSingularity conic_singular_point(const PolarConic& c) {
    return conic_singular_point(c.quadratic());
}

Matrix catalecticant(const TernaryCubic& f, int k) {
    if (k != 1) throw UnsupportedK(k);
    Matrix m(3, 6);
    const Var vars[3] = {Var::X, Var::Y, Var::Z};
    for (std::size_t i = 0; i < 3; ++i) {
        TernaryQuadratic row = partial(f, vars[i]);
        for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = row[j];
    }
    return m;
}

std::size_t essential_variables(const TernaryCubic& f) {
    return rank(catalecticant(f));
}

namespace {

// Lagrange interpolation through (0, values[0]), (1, values[1]), ...
UPoly interpolate(const std::vector<Scalar>& values) {
    UPoly acc;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k].is_zero()) continue;
        UPoly basis(std::vector<Scalar>{Scalar(1)});
        Scalar den(1);
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (j == k) continue;
            basis = basis * UPoly(std::vector<Scalar>{
                                -Scalar(static_cast<long>(j)), Scalar(1)});
            den *= Scalar(static_cast<long>(k)) - Scalar(static_cast<long>(j));
        }
        acc = acc + basis.scaled(values[k] / den);
    }
    return acc;
}

// Coefficient of f restricted to the pencil x = -(b y + c z), as
// polynomials in c, one per surviving binary monomial of (y, z).
std::vector<UPoly> chart_a_conditions(const TernaryCubic& f, const Scalar& b) {
    using namespace mon;
    const std::size_t idx[4] = {y3, y2z, yz2, z3};
    std::vector<std::vector<Scalar>> samples(4);
    for (long k = 0; k <= 3; ++k) {
        Matrix m(3, 3, {Scalar(0), -b, Scalar(-k),
                        Scalar(0), Scalar(1), Scalar(0),
                        Scalar(0), Scalar(0), Scalar(1)});
        TernaryCubic g = substitute_linear(f, m);
        for (std::size_t j = 0; j < 4; ++j) samples[j].push_back(g[idx[j]]);
    }
    std::vector<UPoly> out;
    for (std::size_t j = 0; j < 4; ++j) out.push_back(interpolate(samples[j]));
    return out;
}

std::vector<UPoly> chart_b_conditions(const TernaryCubic& f) {
    using namespace mon;
    const std::size_t idx[3] = {x2z, xz2, z3};
    std::vector<std::vector<Scalar>> samples(3);
    for (long k = 0; k <= 3; ++k) {
        Matrix m(3, 3, {Scalar(1), Scalar(0), Scalar(0),
                        Scalar(0), Scalar(0), Scalar(-k),
                        Scalar(0), Scalar(0), Scalar(1)});
        TernaryCubic g = substitute_linear(f, m);
        for (std::size_t j = 0; j < 3; ++j) samples[j].push_back(g[idx[j]]);
    }
    std::vector<UPoly> out;
    for (std::size_t j = 0; j < 3; ++j) out.push_back(interpolate(samples[j]));
    return out;
}

// Common roots of the non-vanishing conditions, ascending.
std::vector<Scalar> condition_roots(const std::vector<UPoly>& conds) {
    UPoly g;
    bool any = false;
    for (const UPoly& p : conds) {
        if (p.is_zero()) continue;
        g = any ? poly_gcd(g, p) : p;
        any = true;
    }
    // All conditions vanishing identically would mean a whole pencil of
    // lines divides a nonzero cubic.
    assert(any);
    if (g.degree() < 1) return {};
    return tower_roots(g).roots;
}

// Candidate y-coefficients b for factors x + b y + c z, honest over the
// tower.  Handles the degenerate layers where z divides f repeatedly.
std::vector<Scalar> chart_a_b_candidates(const TernaryCubic& f) {
    using namespace mon;
    // f(-b, 1, 0) as a polynomial in b.
    UPoly pb(std::vector<Scalar>{f[y3], -f[xy2], f[x2y], -f[x3]});
    if (!pb.is_zero()) return tower_roots(pb).roots;
    // y^3..x^3 coefficients all vanish, so z | f; a factor with nonzero
    // x-coefficient must divide the quadratic cofactor.
    auto q = divide_by_linear(f, LinearForm{Scalar(0), Scalar(0), Scalar(1)});
    assert(q.has_value());
    UPoly qb(std::vector<Scalar>{(*q)[y2], -(*q)[xy], (*q)[x2]});
    if (!qb.is_zero()) return tower_roots(qb).roots;
    // z | q as well: f = z^2 * (linear), and the linear layer is explicit.
    LinearForm rest{(*q)[xz], (*q)[yz], (*q)[z2]};
    if (rest.a.is_zero()) return {};
    return {rest.b / rest.a};
}

} // namespace

std::optional<std::pair<LinearForm, TernaryQuadratic>> factor_out_line(
    const TernaryCubic& f) {
    using namespace mon;
    assert(!f.is_zero());

    // Chart A: l = x + b y + c z, smallest (b, c) first.
    for (const Scalar& b : chart_a_b_candidates(f)) {
        for (const Scalar& c : condition_roots(chart_a_conditions(f, b))) {
            LinearForm l{Scalar(1), b, c};
            if (auto q = divide_by_linear(f, l)) return std::make_pair(l, *q);
        }
    }

    // Chart B: l = y + c z, possible only without an x^3 term.
    if (f[x3].is_zero()) {
        for (const Scalar& c : condition_roots(chart_b_conditions(f))) {
            LinearForm l{Scalar(0), Scalar(1), c};
            if (auto q = divide_by_linear(f, l)) return std::make_pair(l, *q);
        }
    }

    // Chart C: l = z exactly when f has no pure (x, y) monomials.
    if (f[x3].is_zero() && f[x2y].is_zero() && f[xy2].is_zero() &&
        f[y3].is_zero()) {
        LinearForm l{Scalar(0), Scalar(0), Scalar(1)};
        auto q = divide_by_linear(f, l);
        assert(q.has_value());
        return std::make_pair(l, *q);
    }
    return std::nullopt;
}

LineConicReport line_conic_position(const LinearForm& l,
                                    const TernaryQuadratic& q) {
    assert(!l.is_zero());
    Matrix g = gram_of(q);
    Signature sig = signature(g);
    LineConicReport report{LineConicPosition::Degenerate, sig, {}, {}, false};

    if (sig.definite()) {
        report.position = LineConicPosition::ConicImaginary;
        return report;
    }
    if (sig.n_zero == 0) {
        // Nondegenerate indefinite conic: restrict q to the line and read
        // the sign of the binary discriminant.
        Matrix lrow(1, 3, {l.a, l.b, l.c});
        auto basis = kernel(lrow);
        assert(basis.size() == 2);
        Scalar alpha = q.eval(basis[0][0], basis[0][1], basis[0][2]);
        Scalar gamma = q.eval(basis[1][0], basis[1][1], basis[1][2]);
        Scalar mixed = q.eval(basis[0][0] + basis[1][0],
                              basis[0][1] + basis[1][1],
                              basis[0][2] + basis[1][2]);
        Scalar beta = mixed - alpha - gamma;
        int s = (beta * beta - Scalar(4) * alpha * gamma).sign();
        report.position = s > 0   ? LineConicPosition::Secant
                          : s < 0 ? LineConicPosition::External
                                  : LineConicPosition::Tangent;
        return report;
    }
    if (q.is_zero()) return report;
    ConicSingularity sing = conic_singular_point(q);
    if (std::holds_alternative<ProjectivePoint>(sing)) {
        report.vertex = std::get<ProjectivePoint>(sing);
        report.real_pair = sig.n_plus == 1 && sig.n_minus == 1;
    } else {
        report.double_line = std::get<LinearForm>(sing);
        report.real_pair = true;
    }
    return report;
}

InvariantPair aronhold_ST(const TernaryCubic& f) {
    auto table_eval = [&](const InvariantTerm* terms, std::size_t count,
                          long long den) {
        Scalar acc(0);
        for (std::size_t t = 0; t < count; ++t) {
            Scalar prod(static_cast<long>(terms[t].coeff));
            for (std::size_t i = 0; i < 10; ++i)
                for (unsigned char e = 0; e < terms[t].exps[i]; ++e)
                    prod *= f[i];
            acc += prod;
        }
        return acc / Scalar(static_cast<long>(den));
    };
    return InvariantPair{table_eval(kSTerms, kSCount, kSDenominator),
                         table_eval(kTTerms, kTCount, kTDenominator)};
}

} // namespace cubicrank
