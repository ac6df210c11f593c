#include <doctest.h>

#include <random>

#include "cubicrank/unipoly.hpp"

using namespace cubicrank;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

UPoly poly(std::vector<long> asc) {
    std::vector<Scalar> c;
    c.reserve(asc.size());
    for (long x : asc) c.emplace_back(x);
    return UPoly(std::move(c));
}

} // namespace

TEST_CASE("polynomial arithmetic") {
    UPoly p = poly({1, 2, 3});  // 3t^2 + 2t + 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(q(2)) == q(17));
    CHECK(p.derivative() == poly({2, 6}));
    CHECK((p + poly({0, -2, -3})).degree() == 0);
    CHECK(p * poly({0, 1}) == poly({0, 1, 2, 3}));
    CHECK(UPoly().is_zero());
    CHECK(poly({5}).degree() == 0);

    auto dm = divmod(poly({-1, 0, 0, 1}), poly({-1, 1}));  // t^3-1 by t-1
    CHECK(dm.rem.is_zero());
    CHECK(dm.quot == poly({1, 1, 1}));

    auto dm2 = divmod(poly({1, 0, 1}), poly({1, 1}));  // t^2+1 by t+1
    CHECK(dm2.quot == poly({-1, 1}));
    CHECK(dm2.rem == poly({2}));
}

TEST_CASE("gcd and squarefree part") {
    // (t-1)^2 (t+2) and (t-1)(t-3) share exactly (t-1).
    UPoly a = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
    UPoly b = poly({-1, 1}) * poly({-3, 1});
    CHECK(poly_gcd(a, b) == poly({-1, 1}));
    CHECK(poly_gcd(UPoly(), UPoly()).is_zero());

    CHECK(squarefree_part(a) == poly({-1, 1}) * poly({2, 1}));

    int m = 0;
    UPoly rest = deflate_root(a, q(1), &m);
    CHECK(m == 2);
    CHECK(rest == poly({2, 1}));
    deflate_root(a, q(7), &m);
    CHECK(m == 0);
}

TEST_CASE("real root counting") {
    CHECK(real_root_count(poly({-2, 0, 1})) == 2);    // t^2-2
    CHECK(real_root_count(poly({2, 0, 1})) == 0);     // t^2+2
    CHECK(real_root_count(poly({0, -1, 0, 1})) == 3); // t^3-t
    CHECK(real_root_count(poly({0, -1, 0, 1}), Rational(0), Rational(5)) == 1);
    // Counting is of distinct roots: (t-1)^2 has one.
    CHECK(real_root_count(poly({1, -2, 1})) == 1);
}

TEST_CASE("rational roots") {
    // 6t^3 - 5t^2 - 2t + 1 = (t-1)(2t+1)(3t-1).
    auto r = rational_roots(poly({1, -2, -5, 6}));
    REQUIRE(r.size() == 3);
    CHECK(r[0] == std::pair<Rational, int>{Rational(-1, 2), 1});
    CHECK(r[1] == std::pair<Rational, int>{Rational(1, 3), 1});
    CHECK(r[2] == std::pair<Rational, int>{Rational(1), 1});

    // Zero roots and multiplicities: t^2 (t-3)^2.
    auto z = rational_roots(poly({0, 0, 9, -6, 1}));
    REQUIRE(z.size() == 2);
    CHECK(z[0] == std::pair<Rational, int>{Rational(0), 2});
    CHECK(z[1] == std::pair<Rational, int>{Rational(3), 2});

    // Irrational roots are not reported.
    CHECK(rational_roots(poly({-2, 0, 1})).empty());
    CHECK(rational_roots(poly({1, 1, 1})).empty());

    // Fractional coefficients and large entries.
    UPoly half(std::vector<Scalar>{q(-1, 2), q(0), q(1, 2)});  // (t^2-1)/2
    auto h = rational_roots(half);
    REQUIRE(h.size() == 2);
    CHECK(h[0].first == Rational(-1));
    CHECK(h[1].first == Rational(1));

    auto big = rational_roots(poly({1000003, 1, 0, 0, 1}));
    CHECK(big.empty());

    // Negative leading coefficients: 1 - t^3 and -6t^2 + 3t.
    auto neg = rational_roots(poly({1, 0, 0, -1}));
    REQUIRE(neg.size() == 1);
    CHECK(neg[0] == std::pair<Rational, int>{Rational(1), 1});

    auto negq = rational_roots(poly({0, 3, -6}));
    REQUIRE(negq.size() == 2);
    CHECK(negq[0].first == Rational(0));
    CHECK(negq[1].first == Rational(1, 2));
}

TEST_CASE("solve_quadratic") {
    // Rational roots.
    auto r = solve_quadratic(q(1), q(-3), q(2));
    REQUIRE(r.status == QuadraticRoots::Status::RealPair);
    CHECK(r.first == q(1));
    CHECK(r.second == q(2));

    // Needs one radical: t^2 - 2.
    auto s = solve_quadratic(q(1), q(0), q(-2));
    REQUIRE(s.status == QuadraticRoots::Status::RealPair);
    CHECK(s.second == Scalar::sqrt_of(Rational(2)));
    CHECK(s.first == -s.second);

    // Double root, negative leading coefficient ordering.
    auto d = solve_quadratic(q(-2), q(4), q(-2));
    REQUIRE(d.status == QuadraticRoots::Status::RealPair);
    CHECK(d.first == q(1));
    CHECK(d.second == q(1));
    auto o = solve_quadratic(q(-1), q(0), q(4));
    REQUIRE(o.status == QuadraticRoots::Status::RealPair);
    CHECK(o.first == q(-2));
    CHECK(o.second == q(2));

    CHECK(solve_quadratic(q(1), q(0), q(1)).status ==
          QuadraticRoots::Status::NegativeDiscriminant);

    // Inside Q(sqrt 2): (t - sqrt 2)(t - 2 sqrt 2) stays in the tower.
    Scalar r2 = Scalar::sqrt_of(Rational(2));
    auto t = solve_quadratic(q(1), -q(3) * r2, q(4));
    REQUIRE(t.status == QuadraticRoots::Status::RealPair);
    CHECK(t.first == r2);
    CHECK(t.second == q(2) * r2);

    // Positive discriminant whose root needs a second radical.
    auto u = solve_quadratic(q(1), r2, q(-1));  // disc = 2 + 4 = 6
    CHECK(u.status == QuadraticRoots::Status::OutsideTower);
}

TEST_CASE("tower_roots") {
    // Rational cubic with one rational and two quadratic-irrational roots.
    UPoly p = poly({-1, 1}) * poly({-2, 0, 1});  // (t-1)(t^2-2)
    auto tr = tower_roots(p);
    CHECK(tr.complete);
    REQUIRE(tr.roots.size() == 3);
    Scalar r2 = Scalar::sqrt_of(Rational(2));
    CHECK(tr.roots[0] == -r2);
    CHECK(tr.roots[1] == q(1));
    CHECK(tr.roots[2] == r2);

    // Irreducible rational cubic: a real root exists but generates a cubic
    // field, so the listing is honestly incomplete.
    auto hard = tower_roots(poly({-2, 0, 0, 1}));  // t^3 - 2
    CHECK(hard.roots.empty());
    CHECK(!hard.complete);

    // No real roots beyond the rational one: complete.
    auto one = tower_roots(poly({-1, 1}) * poly({1, 0, 1}));
    CHECK(one.complete);
    REQUIRE(one.roots.size() == 1);
    CHECK(one.roots[0] == q(1));

    // Tagged coefficients: (t - sqrt 2)(t - 1) over Q(sqrt 2).
    UPoly tagged(std::vector<Scalar>{r2, -q(1) - r2, q(1)});
    auto tg = tower_roots(tagged);
    CHECK(tg.complete);
    REQUIRE(tg.roots.size() == 2);
    CHECK(tg.roots[0] == q(1));
    CHECK(tg.roots[1] == r2);

    // Tagged double root at sqrt 2: (t - sqrt 2)^2.
    UPoly dbl(std::vector<Scalar>{q(2), -q(2) * r2, q(1)});
    auto db = tower_roots(dbl);
    CHECK(db.complete);
    REQUIRE(db.roots.size() == 1);
    CHECK(db.roots[0] == r2);

    // Degree 0 and constants.
    CHECK(tower_roots(poly({7})).roots.empty());
    CHECK(tower_roots(poly({7})).complete);
}

TEST_CASE("random root reconstruction") {
    // Build polynomials from known rational roots and recover them.
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<Rational> roots;
        UPoly p = poly({1});
        for (int k = 0; k < 3; ++k) {
            Rational r(num(rng), den(rng));
            roots.push_back(r);
            p = p * UPoly(std::vector<Scalar>{Scalar(-r), Scalar(1)});
        }
        auto found = rational_roots(p);
        int total = 0;
        for (const auto& rm : found) {
            CHECK(p.eval(Scalar(rm.first)).is_zero());
            total += rm.second;
        }
        CHECK(total == 3);
        for (const Rational& r : roots) {
            bool present = false;
            for (const auto& rm : found) present = present || rm.first == r;
            CHECK(present);
        }
    }
}
