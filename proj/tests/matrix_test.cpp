#include <doctest.h>

#include <random>

#include "cubicrank/matrix.hpp"

using namespace cubicrank;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

Matrix from_longs(std::size_t r, std::size_t c, std::vector<long> v) {
    std::vector<Scalar> e;
    e.reserve(v.size());
    for (long x : v) e.emplace_back(x);
    return Matrix(r, c, std::move(e));
}

} // namespace

TEST_CASE("kernel basics") {
    Matrix m = from_longs(2, 3, {0, 1, 0, 1, 0, 0});
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vec{q(0), q(0), q(1)});

    CHECK(kernel(Matrix::identity(3)).empty());

    // Second-partials coefficient matrix of x^2 y in the 6-monomial basis:
    // rows are the three first partials 2xy, x^2, 0.
    Matrix cat = from_longs(3, 6,
                            {0, 2, 0, 0, 0, 0,
                             1, 0, 0, 0, 0, 0,
                             0, 0, 0, 0, 0, 0});
    auto kc = kernel(cat);
    CHECK(kc.size() == 4);
    for (const Vec& v : kc) {
        Vec img = cat.apply(v);
        for (const Scalar& s : img) CHECK(s.is_zero());
    }
    CHECK(rank(cat) + kc.size() == cat.cols());
}

TEST_CASE("determinant") {
    CHECK(determinant(from_longs(2, 2, {1, 2, 3, 4})) == q(-2));
    CHECK(determinant(Matrix::identity(4)) == q(1));
    // Zero leading pivot forces a row swap (and a sign flip).
    CHECK(determinant(from_longs(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == q(-1));
    CHECK(determinant(from_longs(2, 2, {1, 2, 2, 4})).is_zero());

    Scalar r2 = Scalar::sqrt_of(Rational(2));
    Matrix m(2, 2, {r2, q(1), q(1), r2});
    CHECK(determinant(m) == q(1));

    // Rational matrix against a cofactor-expansion value.
    Matrix f(3, 3,
             {q(1, 2), q(1, 3), q(2), q(0), q(3), q(1, 5), q(7), q(-1), q(4)});
    CHECK(determinant(f) == q(1, 2) * (q(3) * q(4) - q(1, 5) * q(-1)) -
                                q(1, 3) * (q(0) - q(1, 5) * q(7)) +
                                q(2) * (q(0) - q(3) * q(7)));
}

TEST_CASE("solve") {
    // Identity system returns b itself.
    Vec b{q(5), q(-2, 3), q(0)};
    auto r = solve(Matrix::identity(3), b);
    CHECK(r.kind == SolveKind::Unique);
    CHECK(r.particular == b);

    // Inconsistent overdetermined system.
    auto bad = solve(from_longs(2, 1, {1, 1}), Vec{q(1), q(2)});
    CHECK(bad.kind == SolveKind::NoSolution);
    CHECK(bad.particular.empty());

    // Underdetermined: free variables pinned to zero in the particular
    // solution, direction space returned as a kernel basis.
    auto u = solve(from_longs(1, 2, {1, 1}), Vec{q(3)});
    CHECK(u.kind == SolveKind::Underdetermined);
    CHECK(u.particular == Vec{q(3), q(0)});
    REQUIRE(u.kernel.size() == 1);
    CHECK(u.kernel[0] == Vec{q(-1), q(1)});

    // Unique solve with a radical right-hand side.
    Scalar r2 = Scalar::sqrt_of(Rational(2));
    Matrix a(2, 2, {r2, q(0), q(0), q(1)});
    auto t = solve(a, Vec{q(2), r2});
    CHECK(t.kind == SolveKind::Unique);
    CHECK(t.particular == Vec{r2, r2});
}

TEST_CASE("signature") {
    Matrix d3 = Matrix::identity(3);
    CHECK(signature(d3) == Signature{3, 0, 0});
    CHECK(signature(d3).definite());

    Matrix dm = from_longs(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, -1});
    CHECK(signature(dm) == Signature{2, 1, 0});
    CHECK(!signature(dm).definite());

    // Symmetric coefficient matrix of x^2-xy-xz+y^2-yz+z^2 (halved
    // off-diagonals) has a one-dimensional radical.
    Matrix g(3, 3,
             {q(1), q(-1, 2), q(-1, 2),
              q(-1, 2), q(1), q(-1, 2),
              q(-1, 2), q(-1, 2), q(1)});
    CHECK(signature(g) == Signature{2, 0, 1});

    // Zero diagonal exercises the row+column addition fallback.
    Matrix h = from_longs(2, 2, {0, 1, 1, 0});
    CHECK(signature(h) == Signature{1, 1, 0});

    CHECK(signature(Matrix(2, 2)) == Signature{0, 0, 2});
}

TEST_CASE("signature congruence invariance") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int iter = 0; iter < 30; ++iter) {
        Matrix s(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j)
                s.at(i, j) = s.at(j, i) = q(coef(rng));

        Matrix p(3, 3);
        do {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) p.at(i, j) = q(coef(rng));
        } while (determinant(p).is_zero());

        CHECK(signature(p.transposed() * s * p) == signature(s));
    }
}

TEST_CASE("rref pivots") {
    Matrix m = from_longs(3, 4, {2, 4, 0, 2, 1, 2, 1, 2, 0, 0, 3, 3});
    Echelon e = rref(m);
    CHECK(e.pivots == std::vector<std::size_t>{0, 2});
    CHECK(e.reduced.at(0, 0) == q(1));
    CHECK(e.reduced.at(0, 1) == q(2));
    CHECK(e.reduced.at(1, 2) == q(1));
    CHECK(rank(m) == 2);
}
