#include <doctest.h>

#include "cubicrank/forms.hpp"

using namespace cubicrank;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

TernaryCubic cub(std::array<long, 10> v) {
    std::array<Scalar, 10> c;
    for (std::size_t i = 0; i < 10; ++i) c[i] = Scalar(v[i]);
    return TernaryCubic(std::move(c));
}

TernaryQuadratic quad6(std::array<long, 6> v) {
    std::array<Scalar, 6> c;
    for (std::size_t i = 0; i < 6; ++i) c[i] = Scalar(v[i]);
    return TernaryQuadratic(std::move(c));
}

LinearForm lf(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

Matrix rows3(std::array<long, 9> v) {
    std::vector<Scalar> e;
    for (long x : v) e.emplace_back(x);
    return Matrix(3, 3, std::move(e));
}

} // namespace

TEST_CASE("partial derivatives") {
    // x^3: only the x-derivative survives.
    TernaryCubic x3 = cub({1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(partial(x3, Var::X) == quad6({3, 0, 0, 0, 0, 0}));
    CHECK(partial(x3, Var::Y).is_zero());

    // (x^2+y^2-z^2) z = x^2 z + y^2 z - z^3.
    TernaryCubic f = cub({0, 0, 1, 0, 0, 0, 0, 1, 0, -1});
    CHECK(partial(f, Var::Z) == quad6({1, 0, 0, 1, 0, -3}));

    // x^3 + y^3 - 3xyz.
    TernaryCubic g = cub({1, 0, 0, 0, -3, 0, 1, 0, 0, 0});
    CHECK(partial(g, Var::X) == quad6({3, 0, 0, 0, -3, 0}));
}

TEST_CASE("euler identity on a fixed form") {
    TernaryCubic f = cub({2, -1, 3, 0, 5, -2, 1, 4, 0, -7});
    TernaryCubic sum =
        mul_ql(partial(f, Var::X), lf(1, 0, 0)) +
        mul_ql(partial(f, Var::Y), lf(0, 1, 0)) +
        mul_ql(partial(f, Var::Z), lf(0, 0, 1));
    CHECK(sum == f.scaled(q(3)));
}

TEST_CASE("substitute_linear") {
    TernaryCubic x3 = cub({1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(substitute_linear(x3, Matrix::identity(3)) == x3);

    // x -> x+y turns x^3 into the binomial expansion.
    Matrix shear = rows3({1, 1, 0, 0, 1, 0, 0, 0, 1});
    CHECK(substitute_linear(x3, shear) == cub({1, 3, 0, 3, 0, 0, 1, 0, 0, 0}));

    // y(y^2+xz) under x -> x+z, z -> x-z becomes y(y^2+x^2-z^2).
    TernaryCubic f = cub({0, 0, 0, 0, 1, 0, 1, 0, 0, 0});
    Matrix m = rows3({1, 0, 1, 0, 1, 0, 1, 0, -1});
    CHECK(substitute_linear(f, m) == cub({0, 1, 0, 0, 0, 0, 1, 0, -1, 0}));

    // Composition agrees with the matrix product.
    Matrix n = rows3({2, 0, 1, 1, 1, 0, 0, 3, -1});
    TernaryCubic g = cub({1, -2, 0, 4, 1, 0, -1, 2, 0, 3});
    CHECK(substitute_linear(substitute_linear(g, m), n) ==
          substitute_linear(g, m * n));
}

TEST_CASE("quadratic substitution") {
    TernaryQuadratic yz = quad6({0, 0, 0, 0, 1, 0});
    Matrix swap_xy = rows3({0, 1, 0, 1, 0, 0, 0, 0, 1});
    CHECK(substitute_linear(yz, swap_xy) == quad6({0, 0, 1, 0, 0, 0}));
    CHECK(substitute_linear(yz, Matrix::identity(3)) == yz);
}

TEST_CASE("expand_cubes classic identities") {
    // Four cubes summing to xyz.
    std::vector<Term> four = {
        {q(1, 24), lf(1, 1, 1)},
        {q(-1, 24), lf(-1, 1, 1)},
        {q(-1, 24), lf(1, -1, 1)},
        {q(-1, 24), lf(1, 1, -1)},
    };
    CHECK(expand_cubes(four) == cub({0, 0, 0, 0, 1, 0, 0, 0, 0, 0}));

    // 4x^3 - (x+y)^3 - (x-y)^3 = 2x^3 - 6xy^2.
    std::vector<Term> three = {
        {q(4), lf(1, 0, 0)},
        {q(-1), lf(1, 1, 0)},
        {q(-1), lf(1, -1, 0)},
    };
    CHECK(expand_cubes(three) == cub({2, 0, 0, -6, 0, 0, 0, 0, 0, 0}));

    // Four cubes summing to y(y^2+xz) = y^3 + xyz.
    std::vector<Term> weighted = {
        {q(1, 96), lf(1, 4, 1)},
        {q(1, 96), lf(-1, 4, -1)},
        {q(-1, 48), lf(1, 2, -1)},
        {q(-1, 48), lf(-1, 2, 1)},
    };
    CHECK(expand_cubes(weighted) == cub({0, 0, 0, 0, 1, 0, 1, 0, 0, 0}));

    // Linearity in an appended term.
    std::vector<Term> plus = three;
    plus.push_back({q(5, 7), lf(1, 2, 3)});
    CHECK(expand_cubes(plus) ==
          expand_cubes(three) + cube(lf(1, 2, 3)).scaled(q(5, 7)));
}

TEST_CASE("proportional") {
    TernaryCubic base = cub({3, 0, 0, -1, 0, -1, 0, 0, 0, 0});
    CHECK(*proportional(base.scaled(q(8)), base) == q(8));
    TernaryCubic f = cub({0, 0, 0, 0, 1, 0, 0, 0, 0, 0});
    CHECK(*proportional(f, f) == q(1));
    CHECK(!proportional(cub({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                        cub({0, 0, 0, 0, 0, 0, 1, 0, 0, 0}))
               .has_value());
    CHECK(*proportional(TernaryCubic(), TernaryCubic()) == q(1));
    CHECK(!proportional(TernaryCubic(), f).has_value());
    CHECK(!proportional(f, TernaryCubic()).has_value());
}

TEST_CASE("division by a linear form") {
    TernaryCubic xyz = cub({0, 0, 0, 0, 1, 0, 0, 0, 0, 0});
    auto yz = divide_by_linear(xyz, lf(1, 0, 0));
    REQUIRE(yz.has_value());
    CHECK(*yz == quad6({0, 0, 0, 0, 1, 0}));
    CHECK(mul_ql(*yz, lf(1, 0, 0)) == xyz);

    auto none = divide_by_linear(cub({1, 0, 0, 0, 0, 0, 1, 0, 0, 0}),
                                 lf(1, 0, 0));
    CHECK(!none.has_value());

    // (x+2y-z) divides its product with any quadratic.
    LinearForm l = lf(1, 2, -1);
    TernaryQuadratic g = quad6({1, -3, 0, 2, 5, -1});
    auto back = divide_by_linear(mul_ql(g, l), l);
    REQUIRE(back.has_value());
    CHECK(*back == g);
}

TEST_CASE("decomposition certificate") {
    std::vector<Term> three = {
        {q(4), lf(1, 0, 0)},
        {q(-1), lf(1, 1, 0)},
        {q(-1), lf(1, -1, 0)},
    };
    TernaryCubic target = cub({2, 0, 0, -6, 0, 0, 0, 0, 0, 0});
    Decomposition d(three, target);
    CHECK(d.size() == 3);
    CHECK(d.target() == target);

    TernaryCubic wrong = cub({2, 0, 0, -6, 0, 0, 1, 0, 0, 0});
    CHECK_THROWS_AS(Decomposition(three, wrong), DecompositionMismatch);
}

TEST_CASE("projective points and lines") {
    ProjectivePoint p(q(0), q(2), q(-4));
    CHECK(p.y() == q(1));
    CHECK(p.z() == q(-2));
    CHECK(p == ProjectivePoint(q(0), q(-3), q(6)));
    CHECK_THROWS_AS(ProjectivePoint(q(0), q(0), q(0)), std::invalid_argument);

    LinearForm l = lf(0, 3, -6);
    CHECK(l.normalized() == LinearForm{q(0), q(1), q(-2)});
    CHECK(*proportional(l, lf(0, 1, -2)) == q(3));
    CHECK(!proportional(l, lf(1, 0, 0)).has_value());
}

TEST_CASE("binary forms") {
    BinaryCubic f(std::array<Scalar, 4>{q(2), q(6), q(9), q(5)});
    CHECK(f.A() == q(2));
    CHECK(f.B() == q(2));
    CHECK(f.C() == q(3));
    CHECK(f.D() == q(5));
    CHECK(f.eval(q(1), q(1)) == q(22));

    // u^3 under u -> u+v.
    BinaryCubic u3(std::array<Scalar, 4>{q(1), q(0), q(0), q(0)});
    Matrix shear(2, 2, {q(1), q(1), q(0), q(1)});
    CHECK(substitute_linear(u3, shear) ==
          BinaryCubic(std::array<Scalar, 4>{q(1), q(3), q(3), q(1)}));

    CHECK(binary_cube(BinaryLinear{q(1), q(-1)}) ==
          BinaryCubic(std::array<Scalar, 4>{q(1), q(-3), q(3), q(-1)}));

    std::vector<BinaryTerm> terms = {
        {q(1, 6), BinaryLinear{q(1), q(1)}},
        {q(-1, 6), BinaryLinear{q(1), q(-1)}},
    };
    // (u+v)^3 - (u-v)^3 = 6u^2v + 2v^3, scaled by 1/6.
    CHECK(expand_binary_cubes(terms) ==
          BinaryCubic(std::array<Scalar, 4>{q(0), q(1), q(0), q(1, 3)}));

    CHECK(*proportional(f, f.scaled(q(1, 4))) == q(4));
}
