#ifndef CUBICRANK_DEPAOLIS_HPP
#define CUBICRANK_DEPAOLIS_HPP

// The De Paolis construction: pick a line l0 meeting the Hessian curve of a
// cubic F in three distinct real points P1, P2, P3.  The polar conic of F at
// each Pi is singular; writing Qi for its singular point, the three joins
//
//     l1 = <P1,Q2>,   l2 = <P2,Q1>,   l3 = <P3,Q1>
//
// complete l0 to a quadruple of lines with F = c0 l0^3 + c1 l1^3 + c2 l2^3
// + c3 l3^3 for exactly solvable constants ci.  Everything runs over the
// scalar tower, so the result is a certified rank <= 4 decomposition
// whenever the three intersection points are real and tower-representable.

#include <array>
#include <stdexcept>
#include <string>

#include "cubicrank/forms.hpp"

namespace cubicrank {

// l0 meets the Hessian curve in fewer than three distinct representable
// points: a repeated intersection, a root outside every real quadratic
// extension (sign < 0: three real roots none representable), or a line
// contained in the cubic itself.
class IndistinctIntersection : public std::runtime_error {
public:
    IndistinctIntersection(const std::string& what, int discriminant_sign)
        : std::runtime_error(what), disc_sign_(discriminant_sign) {}

    // Sign of the discriminant of the restricted cubic whose roots were
    // requested; 0 when the restriction degenerated outright.
    int discriminant_sign() const { return disc_sign_; }

private:
    int disc_sign_;
};

// The polar conic at an intersection point vanishes identically, so the
// cubic is a cone with vertex there and the construction does not apply.
class ConeDetected : public std::runtime_error {
public:
    ConeDetected() : std::runtime_error("polar conic vanishes identically") {}
};

// A premise failed midway: a polar conic turned out nonsingular or singular
// along a whole line, two construction points coincided, or the final
// coefficient solve had no unique answer.  Surfaced as-is; the caller sees
// exactly which premise broke instead of a silently patched result.
class InconsistentSystem : public std::runtime_error {
public:
    explicit InconsistentSystem(const std::string& what)
        : std::runtime_error(what) {}
};

// Input to hesse_flex_line was not of the shape a(x^3+y^3+z^3) + b*xyz.
class NotHesseForm : public std::runtime_error {
public:
    NotHesseForm()
        : std::runtime_error(
              "form is not a member of the Hesse family "
              "a(x^3+y^3+z^3) + b*xyz") {}
};

// Everything the construction produced, kept for auditing: the input line
// (as supplied), the intersection points with the Hessian curve, the
// singular points of the polar conics, the three joined lines (normalized
// so the first nonzero coefficient is 1), and all four solved coefficients
// including any that are zero.
struct DePaolisTrace {
    LinearForm l0;
    std::array<ProjectivePoint, 3> points;
    std::array<ProjectivePoint, 3> singular_points;
    std::array<LinearForm, 3> lines;
    std::array<Scalar, 4> coefficients;
};

// Restriction of f to the line {l0 = 0} as a binary cubic g(u, v) =
// f(u*b1 + v*b2).  The basis pair (b1, b2) spanning the line is chosen
// deterministically from l0's first nonzero coefficient:
//
//     a != 0:  b1 = (-b/a, 1, 0),  b2 = (-c/a, 0, 1)
//     b != 0:  b1 = (1, 0, 0),     b2 = (0, -c/b, 1)
//     else:    b1 = (1, 0, 0),     b2 = (0, 1, 0)
//
// Roots (u : v) of g correspond to the intersection points u*b1 + v*b2 of
// the line with {f = 0}.  Throws std::invalid_argument when l0 = 0.
BinaryCubic restrict_to_line(const TernaryCubic& f, const LinearForm& l0);

struct DePaolisResult {
    Decomposition decomposition;  // zero-coefficient terms dropped
    DePaolisTrace trace;
};

// Runs the construction for f and l0.  Intersection points are ordered by
// ascending root of the restricted Hessian, with the point at infinity of
// the chart (root u/v = infinity) last.  When l0 lies entirely inside the
// Hessian curve the restriction vanishes identically and every point of l0
// has a singular polar; the three distinguished points are then the
// intersections of l0 with f itself (all of which are inflection points).
DePaolisResult depaolis(const TernaryCubic& f, const LinearForm& l0);

struct FlexLine {
    LinearForm line;  // always x + y + z
    // Set when the member is singular (b = -3a, a discriminant zero) or the
    // coordinate triangle itself (a = 0); the construction's premises then
    // need re-checking before use.
    bool degenerate;
};

// For members of the family a(x^3+y^3+z^3) + b*xyz: the line through the
// three real inflection points common to the whole family, namely x+y+z
// through (0,1,-1), (1,0,-1), (1,-1,0).  Throws NotHesseForm for any other
// input, including the zero form.
FlexLine hesse_flex_line(const TernaryCubic& f);

} // namespace cubicrank

#endif
