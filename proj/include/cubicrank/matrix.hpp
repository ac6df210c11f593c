#ifndef CUBICRANK_MATRIX_HPP
#define CUBICRANK_MATRIX_HPP

// Small dense exact linear algebra over Scalar entries.  Everything here is
// exact: elimination pivots on the first nonzero entry (no magnitude
// heuristics needed), determinants use fraction-free Bareiss elimination,
// and inertia is computed by symmetric congruence reduction.
//
// Conventions fixed project-wide:
//   - kernel() basis vectors set one free variable to 1 and the rest to 0;
//     callers wanting projective normalization rescale afterwards.
//   - solve() reports Unique / NoSolution / Underdetermined; in the
//     underdetermined case the particular solution sets free variables to 0
//     and the kernel basis spans the solution set's direction space.

#include <cstddef>
#include <vector>

#include "cubicrank/scalar.hpp"

namespace cubicrank {

using Vec = std::vector<Scalar>;

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    Matrix transposed() const;

    // Matrix-vector product M*v (v.size() == cols).
    Vec apply(const Vec& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

// Reduced row echelon form plus the pivot column of each pivot row.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Exact determinant of a square matrix (fraction-free elimination).
Scalar determinant(const Matrix& m);

// Basis of the right kernel; empty iff full column rank.
std::vector<Vec> kernel(const Matrix& m);

enum class SolveKind { Unique, NoSolution, Underdetermined };

struct SolveResult {
    SolveKind kind;
    Vec particular;           // empty when NoSolution
    std::vector<Vec> kernel;  // nonempty only when Underdetermined
};

SolveResult solve(const Matrix& a, const Vec& b);

// Inertia of a symmetric matrix: counts of positive, negative, and zero
// entries after congruence diagonalization.
struct Signature {
    std::size_t n_plus, n_minus, n_zero;

    bool operator==(const Signature&) const = default;
    bool definite() const {
        return n_zero == 0 && (n_minus == 0 || n_plus == 0);
    }
};

Signature signature(Matrix s);

} // namespace cubicrank

#endif
