#ifndef CUBICRANK_UNIPOLY_HPP
#define CUBICRANK_UNIPOLY_HPP

// Exact univariate polynomials with Scalar coefficients, plus the root
// machinery the geometry layers rely on:
//   - rational_roots: every rational root of a rational-coefficient
//     polynomial, found without integer factorization (Sturm isolation on a
//     monic integer model, then exact checks of the unit-interval endpoints);
//   - solve_quadratic: exact real roots, extending Q by one square root when
//     needed, but never stacking a second radical on an existing tower;
//   - tower_roots: all real roots of a degree <= 3 polynomial that are
//     expressible in Q or a single quadratic extension, with an honest
//     `complete` flag when a cubic-field root had to be left behind.

#include <cstddef>
#include <utility>
#include <vector>

#include "cubicrank/scalar.hpp"

namespace cubicrank {

class UPoly {
public:
    UPoly() = default;                     // the zero polynomial
    explicit UPoly(std::vector<Scalar> coeffs);  // ascending powers

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Scalar(0);
    }
    const Scalar& lead() const { return c_.back(); }

    // True when every coefficient is rational (empty polynomial included).
    bool all_rational() const;
    // The single tower tag shared by the coefficients (0 when all rational).
    Int tower() const;

    Scalar eval(const Scalar& t) const;
    UPoly derivative() const;

    UPoly operator-() const;
    UPoly scaled(const Scalar& s) const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) {
        return a.c_ == b.c_;
    }

private:
    void normalize();
    std::vector<Scalar> c_;
};

struct DivMod {
    UPoly quot, rem;
};

// Polynomial division over the coefficient field; b must be nonzero.
DivMod divmod(const UPoly& a, const UPoly& b);

// Monic greatest common divisor (zero when both arguments are zero).
UPoly poly_gcd(UPoly a, UPoly b);

// p divided by gcd(p, p'): same roots, all simple.
UPoly squarefree_part(const UPoly& p);

// Divide out every factor of (t - r); returns the deflated polynomial and
// stores the multiplicity (0 when r is not a root) if requested.
UPoly deflate_root(const UPoly& p, const Scalar& r, int* multiplicity = nullptr);

// Number of distinct real roots in (lo, hi], then over all of R, by Sturm
// chains.  Rational coefficients required.
int real_root_count(const UPoly& p, const Rational& lo, const Rational& hi);
int real_root_count(const UPoly& p);

// Distinct rational roots with multiplicities, ascending.  Rational
// coefficients and degree >= 1 required.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p);

struct QuadraticRoots {
    enum class Status {
        RealPair,              // two real roots in the (possibly
                               // extended) field; equal on a double root
        NegativeDiscriminant,  // no real roots
        OutsideTower,          // real roots exist but need a second radical
    };
    Status status;
    Scalar first, second;  // ascending; meaningful only for RealPair
};

// Exact roots of a t^2 + b t + c (a nonzero).  Rational inputs may extend
// the field by one square root; inputs already in Q(sqrt d) only ever get
// roots inside that same tower.
QuadraticRoots solve_quadratic(const Scalar& a, const Scalar& b,
                               const Scalar& c);

struct TowerRoots {
    std::vector<Scalar> roots;  // distinct real roots, ascending
    bool complete;              // false when a real root was not expressible
};

// All real roots of p (degree <= 3) lying in Q or one quadratic extension.
TowerRoots tower_roots(const UPoly& p);

} // namespace cubicrank

#endif
