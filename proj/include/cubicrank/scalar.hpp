#ifndef CUBICRANK_SCALAR_HPP
#define CUBICRANK_SCALAR_HPP

// Exact scalars: arbitrary-precision rationals and elements of a single real
// quadratic extension Q(sqrt(d)).
//
// A Scalar stores a + b*sqrt(d) with rational a, b and an integer tower tag d.
// Conventions, fixed project-wide:
//   * d == 0 means the value is plain rational (then b == 0);
//   * otherwise d is squarefree and > 1;
//   * b == 0 collapses the tag back to 0, so equal values have equal
//     representations and operator== is plain memberwise comparison;
//   * two scalars with different nonzero tags never mix: arithmetic on them
//     throws FieldMismatch instead of silently building a biquadratic field.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace cubicrank {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class FieldMismatch : public std::runtime_error {
public:
    FieldMismatch(const Int& d1, const Int& d2);
};

// Thrown when the trial-division bound cannot certify a squarefree part.
class NotCertifiedSquarefree : public std::runtime_error {
public:
    explicit NotCertifiedSquarefree(const Int& cofactor);
};

class InvalidRadicand : public std::runtime_error {
public:
    explicit InvalidRadicand(const std::string& what);
};

// Thrown by scalar_from_string / rational_from_string on malformed input.
class ScalarFormatError : public std::runtime_error {
public:
    explicit ScalarFormatError(const std::string& input);
};

// n = square_root^2 * squarefree with squarefree squarefree, for n > 0.
// Certified by trial division; throws NotCertifiedSquarefree when the
// remaining cofactor is too large to certify (see scalar.cpp for the bound).
struct SquarefreeParts {
    Int square_root;
    Int squarefree;
};
SquarefreeParts squarefree_decompose(Int n);

// Exact test: is n (>= 0) a perfect square?  Returns its root if so.
std::optional<Int> exact_isqrt(const Int& n);

// Exact test: is r (>= 0) the square of a rational?  Returns the root if so.
std::optional<Rational> exact_rational_sqrt(const Rational& r);

class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(int n) : a_(n), b_(0), d_(0) {}
    Scalar(long n) : a_(n), b_(0), d_(0) {}
    Scalar(const Int& n) : a_(n), b_(0), d_(0) {}
    Scalar(const Rational& a) : a_(a), b_(0), d_(0) {}
    // a + b*sqrt(d).  Validates the tag (d squarefree and > 1 when b != 0).
    Scalar(const Rational& a, const Rational& b, const Int& d);

    // sqrt(r) for rational r >= 0, extending to Q(sqrt(d)) when needed.
    // The tag is produced by squarefree decomposition of the radicand.
    static Scalar sqrt_of(const Rational& r);

    const Rational& rat() const { return a_; }
    const Rational& rad() const { return b_; }
    const Int& tower() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    // Exact sign of a + b*sqrt(d): -1, 0, or +1.
    int sign() const;

    Scalar conjugate() const { return Scalar(a_, -b_, d_, unchecked_tag{}); }
    // a^2 - d*b^2; rational, and zero only for the zero element.
    Rational norm() const;

    Scalar operator-() const { return Scalar(-a_, -b_, d_, unchecked_tag{}); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
    friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
    friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
    friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

    friend bool operator==(const Scalar& l, const Scalar& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.d_ == r.d_;
    }
    friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }

    Scalar inverse() const;

    // Exact square root inside this scalar's own field, if one exists
    // (no tower extension is attempted here).  For rational values this is a
    // rational square test; see sqrt_in_tower for roots that pick up a
    // radical from an ambient extension.
    std::optional<Scalar> sqrt_in_field() const;

    // Total order on the reals representable in one shared tower.
    friend bool operator<(const Scalar& l, const Scalar& r) {
        return (l - r).sign() < 0;
    }
    friend bool operator>(const Scalar& l, const Scalar& r) { return r < l; }
    friend bool operator<=(const Scalar& l, const Scalar& r) { return !(r < l); }
    friend bool operator>=(const Scalar& l, const Scalar& r) { return !(l < r); }

private:
    struct unchecked_tag {};
    Scalar(Rational a, Rational b, Int d, unchecked_tag);
    // The common tag of two operands, or FieldMismatch.
    static const Int& merge_tag(const Scalar& l, const Scalar& r);

    Rational a_, b_;
    Int d_;
};

// Square root of s within the field Q(sqrt(ambient_d)), where ambient_d == 0
// requests plain Q.  Needed because normalization strips the tower tag from
// rational values: sqrt_in_field on the rational 2 fails even when the
// surrounding computation lives in Q(sqrt(2)).  Throws FieldMismatch if s
// carries a different radicand than ambient_d.
std::optional<Scalar> sqrt_in_tower(const Scalar& s, const Int& ambient_d);

// Exact decimal-free rendering: "p", "p/q", "p/q+r/s*sqrt(d)",
// "r/s*sqrt(d)", "-sqrt(2)", ...
std::string to_string(const Scalar& s);
std::string to_string(const Rational& r);

// Exact inverses of to_string, accepting precisely its output grammar
// (no whitespace, no parenthesized subexpressions, denominators positive).
// Throw ScalarFormatError on anything else.
Rational rational_from_string(const std::string& s);
Scalar scalar_from_string(const std::string& s);

} // namespace cubicrank

#endif
