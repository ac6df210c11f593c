#include "cubicrank/depaolis.hpp"

#include <stdexcept>
#include <variant>
#include <vector>

#include "cubicrank/binaryrank.hpp"
#include "cubicrank/covariants.hpp"
#include "cubicrank/matrix.hpp"
#include "cubicrank/unipoly.hpp"

namespace cubicrank {
namespace {

// Basis pair (b1, b2) spanning {l = 0}, per the convention documented on
// restrict_to_line.
struct LineChart {
    std::array<Scalar, 3> b1, b2;
};

LineChart line_chart(const LinearForm& l) {
    if (l.a.sign() != 0)
        return {{-l.b / l.a, Scalar(1), Scalar(0)},
                {-l.c / l.a, Scalar(0), Scalar(1)}};
    if (l.b.sign() != 0)
        return {{Scalar(1), Scalar(0), Scalar(0)},
                {Scalar(0), -l.c / l.b, Scalar(1)}};
    return {{Scalar(1), Scalar(0), Scalar(0)},
            {Scalar(0), Scalar(1), Scalar(0)}};
}

ProjectivePoint chart_point(const LineChart& chart, const Scalar& u,
                            const Scalar& v) {
    return ProjectivePoint(u * chart.b1[0] + v * chart.b2[0],
                           u * chart.b1[1] + v * chart.b2[1],
                           u * chart.b1[2] + v * chart.b2[2]);
}

// The line through two distinct points (cross product of coordinate
// triples), normalized so the first nonzero coefficient is 1.
LinearForm join(const ProjectivePoint& p, const ProjectivePoint& q) {
    LinearForm l{p.y() * q.z() - p.z() * q.y(),
                 p.z() * q.x() - p.x() * q.z(),
                 p.x() * q.y() - p.y() * q.x()};
    if (l.is_zero())
        throw InconsistentSystem(
            "two construction points coincide, their join is undefined");
    return l.normalized();
}

// The three points of {l0 = 0} cut out by the binary cubic g on the chart,
// ordered by ascending root, the chart's point at infinity last.  Throws
// IndistinctIntersection unless there are exactly three and all are
// representable in the tower.
std::vector<ProjectivePoint> intersection_points(const BinaryCubic& g,
                                                 const LineChart& chart) {
    UPoly p({g[3], g[2], g[1], g[0]});
    TowerRoots tr = tower_roots(p);
    int disc_sign = binary_discriminant(g).sign();
    if (!tr.complete)
        throw IndistinctIntersection(
            "an intersection point is real but lies outside every real "
            "quadratic extension of the rationals",
            disc_sign);

    std::vector<ProjectivePoint> pts;
    for (const Scalar& t : tr.roots)
        pts.push_back(chart_point(chart, t, Scalar(1)));
    if (g[0].sign() == 0) pts.push_back(chart_point(chart, Scalar(1), Scalar(0)));
    if (pts.size() != 3)
        throw IndistinctIntersection(
            "the line meets the curve in fewer than three distinct real "
            "points",
            disc_sign);
    return pts;
}

ProjectivePoint polar_singular_point(const TernaryCubic& f,
                                     const ProjectivePoint& p) {
    ConicSingularity s = [&] {
        try {
            return conic_singular_point(polar_conic(f, p));
        } catch (const ZeroConic&) {
            throw ConeDetected();
        } catch (const NonsingularConic&) {
            throw InconsistentSystem(
                "polar conic at an intersection point is nonsingular");
        }
    }();
    if (std::holds_alternative<LinearForm>(s))
        throw InconsistentSystem(
            "polar conic at an intersection point is singular along a whole "
            "line, not at a unique point");
    return std::get<ProjectivePoint>(s);
}

} // namespace

BinaryCubic restrict_to_line(const TernaryCubic& f, const LinearForm& l0) {
    if (l0.is_zero())
        throw std::invalid_argument("cannot restrict to the zero line");
    LineChart chart = line_chart(l0);
    // Columns of the substitution are the basis pair: x, y, z each become a
    // linear expression in (u, v) and the third slot stays unused.
    Matrix m(3, 3, {chart.b1[0], chart.b2[0], Scalar(0),
                    chart.b1[1], chart.b2[1], Scalar(0),
                    chart.b1[2], chart.b2[2], Scalar(0)});
    TernaryCubic g = substitute_linear(f, m);
    using namespace mon;
    return BinaryCubic({g[x3], g[x2y], g[xy2], g[y3]});
}

DePaolisResult depaolis(const TernaryCubic& f, const LinearForm& l0) {
    if (l0.is_zero())
        throw std::invalid_argument("cannot run the construction on the zero line");
    LineChart chart = line_chart(l0);

    BinaryCubic g = restrict_to_line(hessian(f), l0);
    if (g.is_zero()) {
        // The whole line lies inside the Hessian curve, so every one of its
        // points has a singular polar.  The distinguished triple is then the
        // intersection with the cubic itself: those points are inflection
        // points, and the construction goes through with them.
        g = restrict_to_line(f, l0);
        if (g.is_zero())
            throw IndistinctIntersection(
                "the line divides the cubic, there is no finite "
                "intersection to work with",
                0);
    }
    std::vector<ProjectivePoint> pts = intersection_points(g, chart);

    std::vector<ProjectivePoint> sing;
    for (const ProjectivePoint& p : pts)
        sing.push_back(polar_singular_point(f, p));

    std::array<LinearForm, 3> lines = {join(pts[0], sing[1]),
                                       join(pts[1], sing[0]),
                                       join(pts[2], sing[0])};

    // Solve f = c0 l0^3 + c1 l1^3 + c2 l2^3 + c3 l3^3 coefficient by
    // coefficient; the 10x4 system must pin the ci down uniquely.
    std::array<TernaryCubic, 4> cubes = {cube(l0), cube(lines[0]),
                                         cube(lines[1]), cube(lines[2])};
    Matrix a(10, 4);
    Vec rhs(10);
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = cubes[j][i];
        rhs[i] = f[i];
    }
    SolveResult sol = solve(a, rhs);
    if (sol.kind == SolveKind::NoSolution)
        throw InconsistentSystem(
            "the four cubed lines do not span the given cubic");
    if (sol.kind == SolveKind::Underdetermined)
        throw InconsistentSystem(
            "the four cubed lines are linearly dependent, the coefficients "
            "are not unique");

    std::vector<Term> terms;
    std::array<LinearForm, 4> forms = {l0, lines[0], lines[1], lines[2]};
    std::array<Scalar, 4> coeffs;
    for (std::size_t j = 0; j < 4; ++j) {
        coeffs[j] = sol.particular[j];
        if (coeffs[j].sign() != 0) terms.push_back({coeffs[j], forms[j]});
    }

    return DePaolisResult{
        Decomposition(std::move(terms), f),
        DePaolisTrace{l0,
                      {pts[0], pts[1], pts[2]},
                      {sing[0], sing[1], sing[2]},
                      lines,
                      coeffs}};
}

FlexLine hesse_flex_line(const TernaryCubic& f) {
    using namespace mon;
    const Scalar& a = f[x3];
    const Scalar& b = f[xyz];
    for (std::size_t i : {x2y, x2z, xy2, xz2, y2z, yz2})
        if (f[i].sign() != 0) throw NotHesseForm();
    if (f[y3] != a || f[z3] != a) throw NotHesseForm();
    if (a.sign() == 0 && b.sign() == 0) throw NotHesseForm();

    bool degenerate = a.sign() == 0 || b == Scalar(-3) * a;
    return FlexLine{LinearForm{Scalar(1), Scalar(1), Scalar(1)}, degenerate};
}

} // namespace cubicrank
