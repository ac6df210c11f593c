#include <doctest.h>

#include "cubicrank/binaryrank.hpp"

using namespace cubicrank;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

BinaryCubic bin(std::array<long, 4> v) {
    std::array<Scalar, 4> c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = Scalar(v[i]);
    return BinaryCubic(std::move(c));
}

BinaryLinear bl(long u, long v) { return {Scalar(u), Scalar(v)}; }

Matrix rows2(std::array<long, 4> v) {
    std::vector<Scalar> e;
    for (long x : v) e.emplace_back(x);
    return Matrix(2, 2, std::move(e));
}

} // namespace

TEST_CASE("binary discriminant") {
    CHECK(binary_discriminant(bin({1, 0, 0, 1})) == q(1));
    CHECK(binary_discriminant(bin({1, 0, -1, 0})) == q(-4, 27));
    CHECK(binary_discriminant(bin({0, 1, 0, 0})) == q(0));

    // Weight 6: a substitution multiplies the discriminant by det^6.
    BinaryCubic f = bin({1, 2, -1, 3});
    Matrix m = rows2({1, 1, 0, 2});
    CHECK(binary_discriminant(substitute_linear(f, m)) ==
          binary_discriminant(f) * q(64));
}

TEST_CASE("binary moment matrix") {
    Matrix cat = binary_catalecticant(bin({1, 3, 6, 10}));
    CHECK(cat.rows() == 2);
    CHECK(cat.cols() == 3);
    CHECK(cat.at(0, 1) == q(1));  // 3B with B = 1
    CHECK(cat.at(1, 2) == q(10));

    CHECK(rank(binary_catalecticant(bin({1, 0, 0, 0}))) == 1);
    CHECK(rank(binary_catalecticant(bin({1, 0, 0, 1}))) == 2);
    CHECK(rank(binary_catalecticant(bin({0, 1, 0, 0}))) == 2);
}

TEST_CASE("binary rank classification") {
    auto cube = binary_real_rank(bin({5, 30, 60, 40}));  // 5(u+2v)^3
    CHECK(cube.rank == 1);
    CHECK(cube.catalecticant_rank == 1);
    CHECK(cube.orbit == BinaryOrbit::PerfectCube);
    CHECK(cube.discriminant == q(0));

    auto pos = binary_real_rank(bin({1, 0, 0, 1}));
    CHECK(pos.rank == 2);
    CHECK(pos.orbit == BinaryOrbit::GenericPositive);

    auto circ = binary_real_rank(bin({1, 0, 1, 0}));  // u(u^2+v^2)
    CHECK(circ.rank == 2);
    CHECK(circ.discriminant == q(4, 27));

    auto neg = binary_real_rank(bin({1, 0, -1, 0}));  // u(u^2-v^2)
    CHECK(neg.rank == 3);
    CHECK(neg.orbit == BinaryOrbit::GenericNegative);

    auto tang = binary_real_rank(bin({0, 1, 0, 0}));  // u^2 v
    CHECK(tang.rank == 3);
    CHECK(tang.catalecticant_rank == 2);
    CHECK(tang.orbit == BinaryOrbit::TangentSurface);

    CHECK_THROWS_AS(binary_real_rank(BinaryCubic()), ZeroForm);
    CHECK_THROWS_AS(binary_decompose(BinaryCubic()), ZeroForm);
}

TEST_CASE("decompose perfect cubes") {
    auto one = binary_decompose(bin({1, 0, 0, 0}));
    REQUIRE(one.size() == 1);
    CHECK(one.terms()[0] == BinaryTerm{q(1), bl(1, 0)});

    auto scaled = binary_decompose(bin({5, 30, 60, 40}));
    REQUIRE(scaled.size() == 1);
    CHECK(scaled.terms()[0] == BinaryTerm{q(5), bl(1, 2)});

    auto vcube = binary_decompose(bin({0, 0, 0, -2}));
    REQUIRE(vcube.size() == 1);
    CHECK(vcube.terms()[0] == BinaryTerm{q(-2), bl(0, 1)});
}

TEST_CASE("decompose rank two") {
    // u^3 + v^3 is already split.
    auto sum = binary_decompose(bin({1, 0, 0, 1}));
    REQUIRE(sum.size() == 2);
    CHECK(sum.terms()[0] == BinaryTerm{q(1), bl(1, 0)});
    CHECK(sum.terms()[1] == BinaryTerm{q(1), bl(0, 1)});

    // 2u^3 + 6uv^2 = (u+v)^3 + (u-v)^3, roots ascending.
    auto pair = binary_decompose(bin({2, 0, 6, 0}));
    REQUIRE(pair.size() == 2);
    CHECK(pair.terms()[0] == BinaryTerm{q(1), bl(1, -1)});
    CHECK(pair.terms()[1] == BinaryTerm{q(1), bl(1, 1)});

    // u(u^2+v^2) needs sqrt(3): 1/2 (u + v/sqrt3)^3 + 1/2 (u - v/sqrt3)^3.
    auto circ = binary_decompose(bin({1, 0, 1, 0}));
    REQUIRE(circ.size() == 2);
    Scalar r = Scalar::sqrt_of(Rational(3)) / Scalar(3);
    CHECK(circ.terms()[0].coeff == q(1, 2));
    CHECK(circ.terms()[0].form == BinaryLinear{Scalar(1), -r});
    CHECK(circ.terms()[1].coeff == q(1, 2));
    CHECK(circ.terms()[1].form == BinaryLinear{Scalar(1), r});
}

TEST_CASE("decompose a double root") {
    // u^2 v = 1/6 (v+u)^3 + 1/6 (v-u)^3 - 1/3 v^3.
    auto t = binary_decompose(bin({0, 1, 0, 0}));
    REQUIRE(t.size() == 3);
    CHECK(t.terms()[0] == BinaryTerm{q(1, 6), bl(1, 1)});
    CHECK(t.terms()[1] == BinaryTerm{q(1, 6), bl(-1, 1)});
    CHECK(t.terms()[2] == BinaryTerm{q(-1, 3), bl(0, 1)});

    // (u-v)^2 (u+v): the double line comes from the partials' gcd.
    auto s = binary_decompose(bin({1, -1, -1, 1}));
    REQUIRE(s.size() == 3);
    CHECK(s.terms()[0] == BinaryTerm{q(1, 6), bl(2, 0)});
    CHECK(s.terms()[1] == BinaryTerm{q(1, 6), bl(0, 2)});
    CHECK(s.terms()[2] == BinaryTerm{q(-1, 3), bl(1, 1)});

    // v^2 (2u+3v): the doubled line is v itself.
    auto v2 = binary_decompose(bin({0, 0, 2, 3}));
    REQUIRE(v2.size() == 3);
    CHECK(v2.terms()[2] == BinaryTerm{q(-1, 3), bl(2, 3)});
}

TEST_CASE("decompose three real roots") {
    // 2u^3 - 6uv^2 = 4u^3 - (u+v)^3 - (u-v)^3.
    auto a = binary_decompose(bin({2, 0, -6, 0}));
    REQUIRE(a.size() == 3);
    CHECK(a.terms()[0] == BinaryTerm{q(4), bl(1, 0)});
    CHECK(a.terms()[1] == BinaryTerm{q(-1), bl(1, 1)});
    CHECK(a.terms()[2] == BinaryTerm{q(-1), bl(1, -1)});

    // u(u^2-v^2) = 4/3 u^3 - 1/6 (u+v)^3 - 1/6 (u-v)^3.
    auto b = binary_decompose(bin({1, 0, -1, 0}));
    REQUIRE(b.size() == 3);
    CHECK(b.terms()[0] == BinaryTerm{q(4, 3), bl(1, 0)});
    CHECK(b.terms()[1] == BinaryTerm{q(-1, 6), bl(1, 1)});
    CHECK(b.terms()[2] == BinaryTerm{q(-1, 6), bl(1, -1)});

    // uv(u+v): the root 0 is preferred, and the certified expansion holds.
    auto c = binary_decompose(bin({0, 1, 1, 0}));
    REQUIRE(c.size() == 3);
    CHECK(c.terms()[0].form == bl(1, 0));

    // (u-v)(u-2v)(u-3v): smallest root 1 splits off first.
    auto d = binary_decompose(bin({1, -6, 11, -6}));
    REQUIRE(d.size() == 3);
    CHECK(d.terms()[0].form == BinaryLinear{Scalar(1), Scalar(-1)});
}

TEST_CASE("decompose via the root at infinity") {
    // v (u^2 - 2 sqrt2 uv - v^2): the finite roots need sqrt(3) on top of
    // sqrt(2), so the line v is the only usable root.
    Scalar r2 = Scalar::sqrt_of(Rational(2));
    BinaryCubic f({Scalar(0), Scalar(1), Scalar(-2) * r2, Scalar(-1)});
    CHECK(binary_real_rank(f).orbit == BinaryOrbit::GenericNegative);
    auto dec = binary_decompose(f);
    REQUIRE(dec.size() == 3);
    CHECK(dec.terms()[0].form == bl(0, 1));
}

TEST_CASE("casus irreducibilis is refused with the rank attached") {
    // u^3 - 3uv^2 + v^3: irreducible with three real cubic-field roots.
    BinaryCubic f = bin({1, 0, -3, 1});
    CHECK(binary_real_rank(f).rank == 3);
    CHECK_THROWS_AS(binary_decompose(f), UnsupportedAlgebraicDegree);
    try {
        binary_decompose(f);
    } catch (const UnsupportedAlgebraicDegree& e) {
        CHECK(e.rank() == 3);
    }
}

TEST_CASE("rank survives a fixed substitution") {
    Matrix m = rows2({1, 1, 0, 2});
    for (auto v : {std::array<long, 4>{1, 0, 0, 0},
                   std::array<long, 4>{1, 0, 0, 1},
                   std::array<long, 4>{1, 0, -1, 0},
                   std::array<long, 4>{0, 1, 0, 0}}) {
        BinaryCubic f = bin(v);
        auto before = binary_real_rank(f);
        auto after = binary_real_rank(substitute_linear(f, m));
        CHECK(after.rank == before.rank);
        CHECK(after.orbit == before.orbit);
    }
}

TEST_CASE("certified binary decompositions reject bad term lists") {
    CHECK_THROWS_AS(
        BinaryDecomposition({{q(1), bl(1, 0)}}, bin({0, 0, 0, 1})),
        DecompositionMismatch);
}
