#ifndef CUBICRANK_FORMS_HPP
#define CUBICRANK_FORMS_HPP

// Homogeneous forms in two and three variables with exact coefficients.
//
// Coefficient orders are fixed project-wide and used verbatim by every
// module and by all text I/O:
//   ternary cubic:     x3, x2y, x2z, xy2, xyz, xz2, y3, y2z, yz2, z3
//   ternary quadratic: x2, xy, xz, y2, yz, z2
//   binary cubic:      u3, u2v, uv2, v3
//   binary quadratic:  u2, uv, v2
//
// Linear substitution convention: substitute_linear(F, M) composes F with
// the change of variables whose i-th row spells the expression replacing
// the i-th variable, i.e. it evaluates F(M.row(0)*(x,y,z), ...).  Applying
// M then N therefore equals applying M*N once.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicrank/matrix.hpp"
#include "cubicrank/scalar.hpp"

namespace cubicrank {

// Monomial indices for the fixed orders above.
namespace mon {
enum : std::size_t { x3, x2y, x2z, xy2, xyz, xz2, y3, y2z, yz2, z3 };
enum : std::size_t { x2 = 0, xy, xz, y2, yz, z2 };
enum : std::size_t { u3 = 0, u2v, uv2, v3 };
enum : std::size_t { u2 = 0, uv, v2 };
} // namespace mon

enum class Var { X, Y, Z };

struct LinearForm {
    Scalar a, b, c;  // a x + b y + c z

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    LinearForm scaled(const Scalar& s) const { return {a * s, b * s, c * s}; }
    // Representative with first nonzero coefficient 1 (is_zero() forbidden).
    LinearForm normalized() const;

    friend LinearForm operator+(const LinearForm& l, const LinearForm& r) {
        return {l.a + r.a, l.b + r.b, l.c + r.c};
    }
    friend LinearForm operator-(const LinearForm& l, const LinearForm& r) {
        return {l.a - r.a, l.b - r.b, l.c - r.c};
    }
    bool operator==(const LinearForm&) const = default;
};

// Nonzero scalar s with l = s*m, if any.
std::optional<Scalar> proportional(const LinearForm& l, const LinearForm& m);

class ProjectivePoint {
public:
    // Normalizes so the first nonzero coordinate is 1; throws
    // std::invalid_argument on the zero triple.
    ProjectivePoint(Scalar x, Scalar y, Scalar z);

    const Scalar& x() const { return x_; }
    const Scalar& y() const { return y_; }
    const Scalar& z() const { return z_; }

    bool operator==(const ProjectivePoint&) const = default;

private:
    Scalar x_, y_, z_;
};

class TernaryQuadratic {
public:
    TernaryQuadratic() = default;
    explicit TernaryQuadratic(std::array<Scalar, 6> c) : c_(std::move(c)) {}

    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const;
    TernaryQuadratic scaled(const Scalar& s) const;
    Scalar eval(const Scalar& x, const Scalar& y, const Scalar& z) const;

    friend TernaryQuadratic operator+(const TernaryQuadratic& f,
                                      const TernaryQuadratic& g);
    friend TernaryQuadratic operator-(const TernaryQuadratic& f,
                                      const TernaryQuadratic& g);
    bool operator==(const TernaryQuadratic&) const = default;

private:
    std::array<Scalar, 6> c_{};
};

class TernaryCubic {
public:
    TernaryCubic() = default;
    explicit TernaryCubic(std::array<Scalar, 10> c) : c_(std::move(c)) {}

    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const;
    TernaryCubic scaled(const Scalar& s) const;
    Scalar eval(const Scalar& x, const Scalar& y, const Scalar& z) const;
    Scalar eval(const ProjectivePoint& p) const {
        return eval(p.x(), p.y(), p.z());
    }

    friend TernaryCubic operator+(const TernaryCubic& f, const TernaryCubic& g);
    friend TernaryCubic operator-(const TernaryCubic& f, const TernaryCubic& g);
    bool operator==(const TernaryCubic&) const = default;

private:
    std::array<Scalar, 10> c_{};
};

struct BinaryLinear {
    Scalar u, v;  // u-coefficient, v-coefficient

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    bool operator==(const BinaryLinear&) const = default;
};

class BinaryQuadratic {
public:
    BinaryQuadratic() = default;
    explicit BinaryQuadratic(std::array<Scalar, 3> c) : c_(std::move(c)) {}

    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const;
    Scalar eval(const Scalar& u, const Scalar& v) const;
    bool operator==(const BinaryQuadratic&) const = default;

private:
    std::array<Scalar, 3> c_{};
};

class BinaryCubic {
public:
    BinaryCubic() = default;
    explicit BinaryCubic(std::array<Scalar, 4> c) : c_(std::move(c)) {}

    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }

    // The classical scaled coefficients: f = A u^3 + 3B u^2v + 3C uv^2 + D v^3.
    Scalar A() const { return c_[0]; }
    Scalar B() const { return c_[1] / Scalar(3); }
    Scalar C() const { return c_[2] / Scalar(3); }
    Scalar D() const { return c_[3]; }

    bool is_zero() const;
    BinaryCubic scaled(const Scalar& s) const;
    Scalar eval(const Scalar& u, const Scalar& v) const;

    friend BinaryCubic operator+(const BinaryCubic& f, const BinaryCubic& g);
    friend BinaryCubic operator-(const BinaryCubic& f, const BinaryCubic& g);
    bool operator==(const BinaryCubic&) const = default;

private:
    std::array<Scalar, 4> c_{};
};

struct Term {
    Scalar coeff;
    LinearForm form;

    bool operator==(const Term&) const = default;
};

struct BinaryTerm {
    Scalar coeff;
    BinaryLinear form;

    bool operator==(const BinaryTerm&) const = default;
};

class DecompositionMismatch : public std::runtime_error {
public:
    DecompositionMismatch()
        : std::runtime_error(
              "term list does not expand to the stated target form") {}
};

// A certified cube decomposition: construction re-expands the terms and
// throws DecompositionMismatch unless they equal the target exactly.
class Decomposition {
public:
    Decomposition(std::vector<Term> terms, TernaryCubic target);

    const std::vector<Term>& terms() const { return terms_; }
    const TernaryCubic& target() const { return target_; }
    std::size_t size() const { return terms_.size(); }

private:
    std::vector<Term> terms_;
    TernaryCubic target_;
};

// The binary counterpart, certified the same way.
class BinaryDecomposition {
public:
    BinaryDecomposition(std::vector<BinaryTerm> terms, BinaryCubic target);

    const std::vector<BinaryTerm>& terms() const { return terms_; }
    const BinaryCubic& target() const { return target_; }
    std::size_t size() const { return terms_.size(); }

private:
    std::vector<BinaryTerm> terms_;
    BinaryCubic target_;
};

// Formal partial derivative (a quadratic form).
TernaryQuadratic partial(const TernaryCubic& f, Var v);

// Products and powers.
TernaryQuadratic mul_ll(const LinearForm& l, const LinearForm& m);
TernaryCubic mul_ql(const TernaryQuadratic& q, const LinearForm& l);
TernaryCubic cube(const LinearForm& l);

// Exact quotient F / l as a quadratic, when l divides F.
std::optional<TernaryQuadratic> divide_by_linear(const TernaryCubic& f,
                                                 const LinearForm& l);

// Sum of coeff * form^3 over the term list.
TernaryCubic expand_cubes(const std::vector<Term>& terms);
BinaryCubic expand_binary_cubes(const std::vector<BinaryTerm>& terms);
BinaryCubic binary_cube(const BinaryLinear& l);

// Composition with a linear change of variables (see header comment).
TernaryCubic substitute_linear(const TernaryCubic& f, const Matrix& m);
TernaryQuadratic substitute_linear(const TernaryQuadratic& q, const Matrix& m);
BinaryCubic substitute_linear(const BinaryCubic& f, const Matrix& m);

// The unique nonzero scalar s with f = s*g, if it exists (1 when both zero).
std::optional<Scalar> proportional(const TernaryCubic& f,
                                   const TernaryCubic& g);
std::optional<Scalar> proportional(const TernaryQuadratic& f,
                                   const TernaryQuadratic& g);
std::optional<Scalar> proportional(const BinaryCubic& f, const BinaryCubic& g);

} // namespace cubicrank

#endif
