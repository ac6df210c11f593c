#include "cubicrank/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace cubicrank {

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void UPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UPoly::all_rational() const {
    for (const Scalar& s : c_)
        if (!s.is_rational()) return false;
    return true;
}

Int UPoly::tower() const {
    for (const Scalar& s : c_)
        if (s.tower() != 0) return s.tower();
    return Int(0);
}

Scalar UPoly::eval(const Scalar& t) const {
    Scalar acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::operator-() const {
    std::vector<Scalar> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return UPoly(std::move(d));
}

UPoly UPoly::scaled(const Scalar& s) const {
    std::vector<Scalar> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * s;
    return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Scalar> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(d));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Scalar> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(d));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Scalar> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            d[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(d));
}

DivMod divmod(const UPoly& a, const UPoly& b) {
    assert(!b.is_zero());
    UPoly rem = a;
    std::vector<Scalar> quot;
    if (a.degree() >= b.degree())
        quot.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                    Scalar(0));
    Scalar lead_inv = b.lead().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        Scalar f = rem.lead() * lead_inv;
        quot[shift] = f;
        std::vector<Scalar> step(shift + 1);
        step[shift] = f;
        rem = rem - b * UPoly(std::move(step));
    }
    return {UPoly(std::move(quot)), std::move(rem)};
}

UPoly poly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.lead().inverse());
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 1) return p;
    UPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return divmod(p, g).quot;
}

UPoly deflate_root(const UPoly& p, const Scalar& r, int* multiplicity) {
    UPoly work = p;
    int m = 0;
    while (work.degree() >= 1 && work.eval(r).is_zero()) {
        // Synthetic division by (t - r); the remainder is eval(r) == 0.
        std::vector<Scalar> q(static_cast<std::size_t>(work.degree()));
        Scalar carry(0);
        for (std::size_t i = q.size(); i-- > 0;) {
            carry = work.coeff(i + 1) + r * carry;
            q[i] = carry;
        }
        work = UPoly(std::move(q));
        ++m;
    }
    if (multiplicity) *multiplicity = m;
    return work;
}

namespace {

// Sturm chain of the squarefree part; counts distinct real roots.
std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    chain.push_back(squarefree_part(p));
    chain.push_back(chain[0].derivative());
    while (!chain.back().is_zero()) {
        const UPoly& s = chain[chain.size() - 2];
        const UPoly& t = chain.back();
        chain.push_back(-divmod(s, t).rem);
    }
    chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<UPoly>& chain, const Rational& t) {
    int vars = 0, prev = 0;
    Scalar st(t);
    for (const UPoly& p : chain) {
        int s = p.eval(st).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// Strict bound B with every real root in (-B, B).
Rational root_bound(const UPoly& p) {
    Rational best(0);
    Rational lead = p.lead().rat();
    if (lead < 0) lead = -lead;
    for (int i = 0; i < p.degree(); ++i) {
        Rational c = p.coeff(static_cast<std::size_t>(i)).rat();
        if (c < 0) c = -c;
        c /= lead;
        if (c > best) best = c;
    }
    return best + 1;
}

} // namespace

int real_root_count(const UPoly& p, const Rational& lo, const Rational& hi) {
    assert(p.all_rational() && p.degree() >= 1);
    auto chain = sturm_chain(p);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int real_root_count(const UPoly& p) {
    assert(p.all_rational() && p.degree() >= 1);
    Rational b = root_bound(p);
    return real_root_count(p, -b, b);
}

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p) {
    assert(p.all_rational() && p.degree() >= 1);
    std::vector<std::pair<Rational, int>> out;

    // Zero roots come off first (trailing zero coefficients).
    UPoly work = p;
    if (work.coeff(0).is_zero()) {
        int m = 0;
        work = deflate_root(work, Scalar(0), &m);
        out.emplace_back(Rational(0), m);
    }
    if (work.degree() < 1) {
        std::sort(out.begin(), out.end());
        return out;
    }

    // Integer model: clear denominators, then substitute u = lead * t and
    // rescale so the polynomial is monic with integer coefficients.  Its
    // rational roots are exactly its integer roots, so exact checks at
    // isolated unit intervals find them all without factoring anything.
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    std::size_t n = static_cast<std::size_t>(work.degree());
    Int den(1);
    for (std::size_t i = 0; i <= n; ++i)
        den = lcm(den, denominator(work.coeff(i).rat()));
    std::vector<Int> a(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational scaled = work.coeff(i).rat() * Rational(den);
        a[i] = numerator(scaled);
    }
    Int an = a[n];
    std::vector<Scalar> monic(n + 1);
    Int pow(1);  // an^(n-1-i), filled highest power last
    monic[n] = Scalar(1);
    for (std::size_t i = n; i-- > 0;) {
        monic[i] = Scalar(Rational(a[i] * pow));
        pow *= an;
    }
    UPoly q(std::move(monic));

    Int bound = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int mag = boost::multiprecision::abs(
            numerator(q.coeff(i).rat()));
        if (mag + 1 > bound) bound = mag + 1;
    }

    // Bisection on half-integer endpoints: a monic integer polynomial never
    // vanishes at a half-integer, so Sturm counts on (lo, hi] are clean, and
    // a unit interval holds exactly one integer candidate.
    auto chain = sturm_chain(q);
    auto var_at = [&](const Int& twice) {
        return sign_variations(chain, Rational(twice, 2));
    };
    std::vector<std::pair<Int, Int>> stack;  // doubled endpoints, odd values
    stack.emplace_back(-2 * bound - 1, 2 * bound + 1);
    while (!stack.empty()) {
        auto [lo2, hi2] = stack.back();
        stack.pop_back();
        if (var_at(lo2) - var_at(hi2) == 0) continue;
        if (hi2 - lo2 == 2) {
            Int cand = (lo2 + 1) / 2;
            if (q.eval(Scalar(Rational(cand))).is_zero()) {
                // Divide instead of Rational(cand, an): the two-argument
                // constructor rejects negative denominators.
                Rational root = Rational(cand) / Rational(an);
                int m = 0;
                deflate_root(p, Scalar(root), &m);
                out.emplace_back(root, m);
            }
            continue;
        }
        Int mid2 = lo2 + (hi2 - lo2) / 2;
        if (mid2 % 2 == 0) mid2 += 1;  // keep endpoints on the odd grid
        stack.emplace_back(lo2, mid2);
        stack.emplace_back(mid2, hi2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

QuadraticRoots solve_quadratic(const Scalar& a, const Scalar& b,
                               const Scalar& c) {
    assert(!a.is_zero());
    Scalar disc = b * b - Scalar(4) * a * c;
    int sg = disc.sign();
    if (sg < 0) return {QuadraticRoots::Status::NegativeDiscriminant, {}, {}};
    Scalar half = (Scalar(2) * a).inverse();
    if (sg == 0) {
        Scalar r = -b * half;
        return {QuadraticRoots::Status::RealPair, r, r};
    }
    Int ambient = a.tower();
    if (ambient == 0) ambient = b.tower();
    if (ambient == 0) ambient = c.tower();
    Scalar root(0);
    if (ambient == 0) {
        root = Scalar::sqrt_of(disc.rat());
    } else {
        auto r = sqrt_in_tower(disc, ambient);
        if (!r) return {QuadraticRoots::Status::OutsideTower, {}, {}};
        root = *r;
    }
    Scalar r1 = (-b - root) * half;
    Scalar r2 = (-b + root) * half;
    if (r2 < r1) std::swap(r1, r2);
    return {QuadraticRoots::Status::RealPair, r1, r2};
}

TowerRoots tower_roots(const UPoly& p) {
    assert(p.degree() <= 3);
    TowerRoots out{{}, true};
    if (p.degree() < 1) return out;

    UPoly work = p;
    if (p.all_rational()) {
        for (const auto& rm : rational_roots(p)) {
            out.roots.emplace_back(rm.first);
            work = deflate_root(work, Scalar(rm.first));
        }
    } else {
        // Coefficients a + b sqrt(d): a rational number is a root exactly
        // when it kills both the rational and the radical coefficient
        // polynomials, so hunt in their gcd.
        std::vector<Scalar> rat_c, rad_c;
        for (int i = 0; i <= p.degree(); ++i) {
            Scalar s = p.coeff(static_cast<std::size_t>(i));
            rat_c.emplace_back(s.rat());
            rad_c.emplace_back(s.rad());
        }
        UPoly g = poly_gcd(UPoly(std::move(rat_c)), UPoly(std::move(rad_c)));
        if (g.degree() >= 1) {
            for (const auto& rm : rational_roots(g)) {
                if (!p.eval(Scalar(rm.first)).is_zero()) continue;
                out.roots.emplace_back(rm.first);
                work = deflate_root(work, Scalar(rm.first));
            }
        }
    }

    switch (work.degree()) {
    case 3:
        // No rational root, so the real root generates a cubic field.
        out.complete = false;
        break;
    case 2: {
        auto qr = solve_quadratic(work.coeff(2), work.coeff(1), work.coeff(0));
        if (qr.status == QuadraticRoots::Status::RealPair) {
            out.roots.push_back(qr.first);
            if (qr.second != qr.first) out.roots.push_back(qr.second);
        } else if (qr.status == QuadraticRoots::Status::OutsideTower) {
            out.complete = false;
        }
        break;
    }
    case 1:
        out.roots.push_back(-work.coeff(0) / work.coeff(1));
        break;
    default:
        break;
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

} // namespace cubicrank
