#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cubicrank/covariants.hpp"
#include "cubicrank/depaolis.hpp"
#include "cubicrank/matrix.hpp"

using namespace cubicrank;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

TernaryCubic cub(std::array<long, 10> v) {
    std::array<Scalar, 10> c;
    for (std::size_t i = 0; i < 10; ++i) c[i] = Scalar(v[i]);
    return TernaryCubic(std::move(c));
}

BinaryCubic bin(std::array<long, 4> v) {
    return BinaryCubic({Scalar(v[0]), Scalar(v[1]), Scalar(v[2]), Scalar(v[3])});
}

LinearForm lf(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

Matrix rows3(std::array<long, 9> v) {
    std::vector<Scalar> e;
    for (long x : v) e.emplace_back(x);
    return Matrix(3, 3, std::move(e));
}

// x^3 + y^3 + z^3 + 6t xyz.
TernaryCubic diagonal_family(const Scalar& t) {
    TernaryCubic f = cub({1, 0, 0, 0, 0, 0, 1, 0, 0, 1});
    f[mon::xyz] = Scalar(6) * t;
    return f;
}

bool on_line(const LinearForm& l, const ProjectivePoint& p) {
    return (l.a * p.x() + l.b * p.y() + l.c * p.z()).sign() == 0;
}

// The monomial-level contribution of one term, a gauge-free fingerprint:
// rescaling the line rescales the coefficient by the inverse cube.
TernaryCubic contribution(const Term& t) { return cube(t.form).scaled(t.coeff); }

std::vector<TernaryCubic> contributions(const Decomposition& d) {
    std::vector<TernaryCubic> out;
    for (const Term& t : d.terms()) out.push_back(contribution(t));
    return out;
}

bool same_multiset(std::vector<TernaryCubic> a, std::vector<TernaryCubic> b) {
    if (a.size() != b.size()) return false;
    for (const TernaryCubic& f : a) {
        auto it = std::find(b.begin(), b.end(), f);
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

} // namespace

TEST_CASE("restriction to a line") {
    // x^3 cut down to {z = 0} stays u^3 in the chart (u, v) = (x, y).
    CHECK(restrict_to_line(cub({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}), lf(0, 0, 1)) ==
          bin({1, 0, 0, 0}));

    // Chart driven by the y coefficient: x^3+y^3+z^3 on {y + 2z = 0} becomes
    // u^3 + (-2v)^3 + v^3.
    CHECK(restrict_to_line(cub({1, 0, 0, 0, 0, 0, 1, 0, 0, 1}), lf(0, 1, 2)) ==
          bin({1, 0, 0, -7}));

    // The diagonal family cut by x+y+z.
    CHECK(restrict_to_line(cub({1, 0, 0, 0, 0, 0, 1, 0, 0, 1}), lf(1, 1, 1)) ==
          bin({0, -3, -3, 0}));
    CHECK(restrict_to_line(hessian(diagonal_family(Scalar(2))), lf(1, 1, 1)) ==
          bin({0, -1080, -1080, 0}));

    // Hessian of 18y(x^2+yz) is the triple line -46656 y^3; on {x = 0} the
    // chart keeps y as u, so the restriction is a perfect cube.
    TernaryCubic f = cub({0, 18, 0, 0, 0, 0, 0, 18, 0, 0});
    CHECK(restrict_to_line(hessian(f), lf(1, 0, 0)) == bin({-46656, 0, 0, 0}));

    CHECK_THROWS_AS(restrict_to_line(f, lf(0, 0, 0)), std::invalid_argument);
}

TEST_CASE("four cubes for the diagonal family") {
    // lambda = 2: everything rational, fully pinned down.
    DePaolisResult r = depaolis(diagonal_family(Scalar(2)), lf(1, 1, 1));
    CHECK(r.trace.points[0] == ProjectivePoint(q(0), q(1), q(-1)));
    CHECK(r.trace.points[1] == ProjectivePoint(q(1), q(0), q(-1)));
    CHECK(r.trace.points[2] == ProjectivePoint(q(1), q(-1), q(0)));
    CHECK(r.trace.singular_points[0] == ProjectivePoint(q(1), q(2), q(2)));
    CHECK(r.trace.singular_points[1] == ProjectivePoint(q(2), q(1), q(2)));
    CHECK(r.trace.singular_points[2] == ProjectivePoint(q(2), q(2), q(1)));
    CHECK(r.trace.lines[0] == LinearForm{q(1), q(-2, 3), q(-2, 3)});
    CHECK(r.trace.lines[1] == LinearForm{q(1), q(-3, 2), q(1)});
    CHECK(r.trace.lines[2] == LinearForm{q(1), q(1), q(-3, 2)});
    CHECK(r.trace.coefficients[0] == Scalar(q(14, 25)));
    CHECK(r.trace.coefficients[1] == Scalar(q(27, 25)));
    CHECK(r.trace.coefficients[2] == Scalar(q(-8, 25)));
    CHECK(r.trace.coefficients[3] == Scalar(q(-8, 25)));
    CHECK(r.decomposition.size() == 4);

    // lambda = 1/3 stays rational too.
    DePaolisResult r3 = depaolis(diagonal_family(Scalar(q(1, 3))), lf(1, 1, 1));
    CHECK(r3.trace.coefficients[0] == Scalar(q(13, 75)));
    CHECK(r3.trace.coefficients[1] == Scalar(q(64, 75)));
    CHECK(r3.trace.coefficients[2] == Scalar(q(-1, 75)));
    CHECK(r3.trace.coefficients[3] == Scalar(q(-1, 75)));

    // lambda = -1 lands on the classical symmetric identity with lines
    // y+z, x+z, x+y.
    DePaolisResult rm = depaolis(diagonal_family(Scalar(-1)), lf(1, 1, 1));
    CHECK(rm.trace.lines[0] == lf(0, 1, 1));
    CHECK(rm.trace.lines[1] == lf(1, 0, 1));
    CHECK(rm.trace.lines[2] == lf(1, 1, 0));
    CHECK(rm.trace.coefficients[0] == Scalar(-1));
    CHECK(rm.trace.coefficients[1] == Scalar(1));
    CHECK(rm.trace.coefficients[2] == Scalar(1));
    CHECK(rm.trace.coefficients[3] == Scalar(1));
}

TEST_CASE("line inside the Hessian curve falls back to inflection points") {
    // At lambda = 1 the Hessian of the family degenerates to the chosen
    // line times a conic, so the restriction vanishes identically; the
    // construction must switch to the intersection with the cubic itself
    // and still come out exact.
    DePaolisResult r = depaolis(diagonal_family(Scalar(1)), lf(1, 1, 1));
    CHECK(r.trace.points[0] == ProjectivePoint(q(0), q(1), q(-1)));
    CHECK(r.trace.points[1] == ProjectivePoint(q(1), q(0), q(-1)));
    CHECK(r.trace.points[2] == ProjectivePoint(q(1), q(-1), q(0)));
    for (const ProjectivePoint& s : r.trace.singular_points)
        CHECK(s == ProjectivePoint(q(1), q(1), q(1)));
    CHECK(r.trace.lines[0] == LinearForm{q(1), q(-1, 2), q(-1, 2)});
    CHECK(r.trace.lines[1] == LinearForm{q(1), q(-2), q(1)});
    CHECK(r.trace.lines[2] == LinearForm{q(1), q(1), q(-2)});
    CHECK(r.trace.coefficients[0] == Scalar(q(1, 3)));
    CHECK(r.trace.coefficients[1] == Scalar(q(8, 9)));
    CHECK(r.trace.coefficients[2] == Scalar(q(-1, 9)));
    CHECK(r.trace.coefficients[3] == Scalar(q(-1, 9)));
}

TEST_CASE("zero coefficients are dropped from the decomposition") {
    // The Fermat cubic needs no cube of x+y+z at all: the solve returns
    // c0 = 0 and the decomposition is the plain diagonal, but the trace
    // still records all four coefficients.
    DePaolisResult r = depaolis(cub({1, 0, 0, 0, 0, 0, 1, 0, 0, 1}), lf(1, 1, 1));
    CHECK(r.trace.coefficients[0] == Scalar(0));
    CHECK(r.decomposition.size() == 3);
    CHECK(r.trace.lines[0] == lf(1, 0, 0));
    CHECK(r.trace.lines[1] == lf(0, 1, 0));
    CHECK(r.trace.lines[2] == lf(0, 0, 1));
    for (const Term& t : r.decomposition.terms()) CHECK(t.coeff == Scalar(1));
}

TEST_CASE("coordinate triangle still splits into four cubes") {
    // xyz is far from smooth, yet the construction goes through and finds
    // the classical four-cube identity.
    DePaolisResult r = depaolis(cub({0, 0, 0, 0, 1, 0, 0, 0, 0, 0}), lf(1, 1, 1));
    CHECK(r.trace.singular_points[0] == ProjectivePoint(q(0), q(1), q(1)));
    CHECK(r.trace.singular_points[1] == ProjectivePoint(q(1), q(0), q(1)));
    CHECK(r.trace.singular_points[2] == ProjectivePoint(q(1), q(1), q(0)));
    CHECK(r.trace.lines[0] == lf(1, -1, -1));
    CHECK(r.trace.lines[1] == lf(1, -1, 1));
    CHECK(r.trace.lines[2] == lf(1, 1, -1));
    CHECK(r.trace.coefficients[0] == Scalar(q(1, 24)));
    CHECK(r.trace.coefficients[1] == Scalar(q(1, 24)));
    CHECK(r.trace.coefficients[2] == Scalar(q(-1, 24)));
    CHECK(r.trace.coefficients[3] == Scalar(q(-1, 24)));
}

TEST_CASE("input line is kept exactly as supplied") {
    DePaolisResult r = depaolis(diagonal_family(Scalar(2)), lf(2, 2, 2));
    CHECK(r.trace.l0 == lf(2, 2, 2));
    // Same chart, so the same construction; only c0 rescales by 1/8.
    CHECK(r.trace.coefficients[0] == Scalar(q(7, 100)));
    CHECK(r.decomposition.terms()[0].form == lf(2, 2, 2));
}

TEST_CASE("incidence structure of the construction") {
    for (long num : {2, 5, 7}) {
        TernaryCubic f = diagonal_family(Scalar(num));
        LinearForm l0 = lf(1, 1, 1);
        DePaolisResult r = depaolis(f, l0);
        TernaryCubic h = hessian(f);
        const DePaolisTrace& tr = r.trace;

        for (const ProjectivePoint& p : tr.points) {
            CHECK(on_line(l0, p));
            CHECK(h.eval(p).sign() == 0);
        }
        // Each singular point rides on the two lines not built from it.
        CHECK(on_line(tr.lines[1], tr.singular_points[0]));
        CHECK(on_line(tr.lines[2], tr.singular_points[0]));
        CHECK(on_line(tr.lines[0], tr.singular_points[1]));
        CHECK(on_line(tr.lines[2], tr.singular_points[1]));
        CHECK(on_line(tr.lines[0], tr.singular_points[2]));
        CHECK(on_line(tr.lines[1], tr.singular_points[2]));
        // And each line passes through the point it was built from.
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(on_line(tr.lines[i], tr.points[i]));
    }
}

TEST_CASE("construction commutes with a change of coordinates") {
    TernaryCubic f = diagonal_family(Scalar(2));
    LinearForm l0 = lf(1, 1, 1);
    Matrix m = rows3({1, 1, 0, 0, 1, 0, 1, 0, 1});  // det 1

    TernaryCubic fm = substitute_linear(f, m);
    // l0 pulls back to the row vector (a, b, c) * m.
    LinearForm l0m = lf(2, 2, 1);
    DePaolisResult r = depaolis(f, l0);
    DePaolisResult rm = depaolis(fm, l0m);

    std::vector<TernaryCubic> pulled;
    for (const Term& t : r.decomposition.terms())
        pulled.push_back(substitute_linear(contribution(t), m));
    CHECK(same_multiset(pulled, contributions(rm.decomposition)));
}

TEST_CASE("degenerate intersections are refused") {
    // (x+y+z) divides this form, so there is nothing to intersect.
    TernaryCubic split = cub({1, 0, 0, 0, -3, 0, 1, 0, 0, 1});
    CHECK_THROWS_WITH_AS(depaolis(split, lf(1, 1, 1)),
                         "the line divides the cubic, there is no finite "
                         "intersection to work with",
                         IndistinctIntersection);

    // Hessian of the cuspidal cubic y^2 z - x^3 is 24xy^2; the line x+y
    // meets it in a single triple point.
    try {
        depaolis(cub({-1, 0, 0, 0, 0, 0, 0, 1, 0, 0}), lf(1, 1, 0));
        CHECK(false);
    } catch (const IndistinctIntersection& e) {
        CHECK(e.discriminant_sign() == 0);
    }

    // Here the restricted Hessian is 8u^3 + 42u^2 v + 24uv^2 - 2v^3,
    // irreducible with three real roots: none lives in a quadratic
    // extension, and the failure reports the negative discriminant sign.
    TernaryCubic casus = cub({0, 1, 1, 0, 1, 0, -1, 1, 0, 1});
    try {
        depaolis(casus, lf(0, 0, 1));
        CHECK(false);
    } catch (const IndistinctIntersection& e) {
        CHECK(e.discriminant_sign() == -1);
    }
}

TEST_CASE("flex line of the diagonal family") {
    FlexLine fl = hesse_flex_line(diagonal_family(Scalar(2)));
    CHECK(fl.line == lf(1, 1, 1));
    CHECK_FALSE(fl.degenerate);

    // Fermat (b = 0) is a smooth member.
    CHECK_FALSE(hesse_flex_line(cub({1, 0, 0, 0, 0, 0, 1, 0, 0, 1})).degenerate);

    // The coordinate triangle and the member with a vanishing discriminant
    // still report the line but flag it.
    CHECK(hesse_flex_line(cub({0, 0, 0, 0, 1, 0, 0, 0, 0, 0})).degenerate);
    CHECK(hesse_flex_line(cub({1, 0, 0, 0, -3, 0, 1, 0, 0, 1})).degenerate);

    CHECK_THROWS_AS(hesse_flex_line(cub({1, 1, 0, 0, 0, 0, 0, 0, 0, 0})),
                    NotHesseForm);
    CHECK_THROWS_AS(hesse_flex_line(cub({1, 0, 0, 0, 0, 0, 1, 0, 0, 2})),
                    NotHesseForm);
    CHECK_THROWS_AS(hesse_flex_line(cub({0, 0, 0, 0, 0, 0, 0, 0, 0, 0})),
                    NotHesseForm);
}
