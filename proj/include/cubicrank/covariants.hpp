#ifndef CUBICRANK_COVARIANTS_HPP
#define CUBICRANK_COVARIANTS_HPP

// Differential and invariant-theoretic gadgets for ternary cubics: the
// Hessian, polar conics and their singular points, catalecticant matrices,
// essential-variable counts, linear-factor extraction, the mutual position
// of a line and a conic, and the two fundamental coefficient invariants.

#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>

#include "cubicrank/forms.hpp"
#include "cubicrank/matrix.hpp"

namespace cubicrank {

class UnsupportedK : public std::invalid_argument {
public:
    explicit UnsupportedK(int k)
        : std::invalid_argument("catalecticant order " + std::to_string(k) +
                                " is out of scope (only k = 1)") {}
};

class NonsingularConic : public std::runtime_error {
public:
    NonsingularConic()
        : std::runtime_error("conic is nonsingular; no singular point") {}
};

class ZeroConic : public std::runtime_error {
public:
    ZeroConic() : std::runtime_error("conic vanishes identically") {}
};

// Symmetric Gram matrix of a quadratic form; off-diagonal entries are half
// the mixed coefficients (fixed project-wide).
Matrix gram_of(const TernaryQuadratic& q);
TernaryQuadratic quadratic_of(const Matrix& gram);

struct PolarConic {
    Matrix gram;

    TernaryQuadratic quadratic() const { return quadratic_of(gram); }
};

// Determinant of the matrix of second partials, with its honest scalar
// (callers compare via proportional()).
TernaryCubic hessian(const TernaryCubic& f);

// The polar conic of f at y: the directional derivative quadratic.
PolarConic polar_conic(const TernaryCubic& f, const ProjectivePoint& y);

// Singular locus of a degenerate conic: a unique point for a rank-2 form,
// the full repeated line for a rank-1 form.  Throws NonsingularConic /
// ZeroConic at the extremes.
using ConicSingularity = std::variant<ProjectivePoint, LinearForm>;
ConicSingularity conic_singular_point(const TernaryQuadratic& q);
ConicSingularity conic_singular_point(const PolarConic& c);

// 3x6 matrix of the first-order contraction map in the fixed monomial
// bases: row i is the i-th partial of f as a quadratic coefficient vector.
// Only k = 1 is in scope; other orders throw UnsupportedK.
Matrix catalecticant(const TernaryCubic& f, int k = 1);

// Rank of the catalecticant: how many variables f genuinely uses.
std::size_t essential_variables(const TernaryCubic& f);

// A linear factor of f over Q or the single active quadratic extension,
// together with the exact quadratic cofactor.  Among all such factors the
// smallest is returned, ordering lines x+by+cz before y+cz before z and
// then by ascending coefficients.  nullopt when no factor exists over the
// tower (including factors that would need a cubic field).
std::optional<std::pair<LinearForm, TernaryQuadratic>> factor_out_line(
    const TernaryCubic& f);

enum class LineConicPosition {
    External,        // nondegenerate real conic, line misses it over R
    Secant,          // nondegenerate real conic, two real crossings
    Tangent,         // nondegenerate real conic, one double contact
    ConicImaginary,  // definite conic: no real points
    Degenerate,      // conic of rank <= 2; see the detail fields
};

struct LineConicReport {
    LineConicPosition position;
    Signature conic_signature;
    // Degenerate detail: a rank-2 conic is a pair of lines (real or
    // imaginary) through `vertex`; a rank-1 conic is `double_line` twice.
    std::optional<ProjectivePoint> vertex;
    std::optional<LinearForm> double_line;
    bool real_pair = false;
};

LineConicReport line_conic_position(const LinearForm& l,
                                    const TernaryQuadratic& q);

struct InvariantPair {
    Scalar S, T;  // degrees 4 and 6 in the coefficients

    // The discriminant combination T^2 + 64 S^3; zero exactly on the
    // singular cubics.
    Scalar discriminant() const {
        return T * T + Scalar(64) * S * S * S;
    }
};

// The two fundamental invariants, normalized on x^3+y^3+z^3+6*lam*xyz to
// S = lam - lam^4 and T = 1 - 20 lam^3 - 8 lam^6.
InvariantPair aronhold_ST(const TernaryCubic& f);

} // namespace cubicrank

#endif
