#include "cubicrank/matrix.hpp"

#include <cassert>
#include <utility>

namespace cubicrank {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    assert(e_.size() == rows_ * cols_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vec Matrix::apply(const Vec& v) const {
    assert(v.size() == cols_);
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Echelon rref(const Matrix& m) {
    Echelon out{m, {}};
    Matrix& r = out.reduced;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        // First nonzero entry in this column at or below the lead row.
        std::size_t piv = lead;
        while (piv < r.rows() && r.at(piv, col).is_zero()) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(piv, j), r.at(lead, j));
        Scalar inv = r.at(lead, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Scalar f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) -= f * r.at(lead, j);
        }
        out.pivots.push_back(col);
        ++lead;
    }
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Scalar determinant(const Matrix& m) {
    assert(m.rows() == m.cols());
    std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    // Bareiss fraction-free elimination: every division is exact, and
    // intermediate entries stay minors of the original matrix.
    Matrix a = m;
    Scalar prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k).is_zero()) ++piv;
            if (piv == n) return Scalar(0);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(piv, j), a.at(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j))
                             / prev;
        prev = a.at(k, k);
    }
    Scalar det = a.at(n - 1, n - 1);
    return negate ? -det : det;
}

std::vector<Vec> kernel(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const Matrix& a, const Vec& b) {
    assert(b.size() == a.rows());
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Echelon e = rref(aug);
    for (std::size_t c : e.pivots)
        if (c == a.cols()) return {SolveKind::NoSolution, {}, {}};

    Vec x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.reduced.at(r, a.cols());
    if (e.pivots.size() == a.cols()) return {SolveKind::Unique, std::move(x), {}};
    return {SolveKind::Underdetermined, std::move(x), kernel(a)};
}

Signature signature(Matrix s) {
    assert(s.rows() == s.cols());
    std::size_t n = s.rows();
    Signature sig{0, 0, 0};
    for (std::size_t k = 0; k < n; ++k) {
        if (s.at(k, k).is_zero()) {
            // Prefer a later nonzero diagonal entry (symmetric swap keeps
            // congruence); failing that, fold a nonzero off-diagonal entry
            // onto the diagonal by a symmetric row+column addition.
            std::size_t j = k + 1;
            while (j < n && s.at(j, j).is_zero()) ++j;
            if (j < n) {
                for (std::size_t c = 0; c < n; ++c)
                    std::swap(s.at(k, c), s.at(j, c));
                for (std::size_t r = 0; r < n; ++r)
                    std::swap(s.at(r, k), s.at(r, j));
            } else {
                j = k + 1;
                while (j < n && s.at(k, j).is_zero()) ++j;
                if (j == n) {
                    ++sig.n_zero;
                    continue;
                }
                for (std::size_t c = 0; c < n; ++c)
                    s.at(k, c) += s.at(j, c);
                for (std::size_t r = 0; r < n; ++r)
                    s.at(r, k) += s.at(r, j);
            }
        }
        Scalar piv = s.at(k, k);
        (piv.sign() > 0 ? sig.n_plus : sig.n_minus) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (s.at(i, k).is_zero()) continue;
            Scalar f = s.at(i, k) / piv;
            for (std::size_t c = 0; c < n; ++c) s.at(i, c) -= f * s.at(k, c);
            for (std::size_t r = 0; r < n; ++r) s.at(r, i) -= f * s.at(r, k);
        }
    }
    return sig;
}

} // namespace cubicrank
