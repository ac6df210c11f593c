#include "cubicrank/classifier.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubicrank/catalog.hpp"
#include "cubicrank/covariants.hpp"
#include "cubicrank/depaolis.hpp"
#include "cubicrank/matrix.hpp"
#include "cubicrank/unipoly.hpp"

namespace cubicrank {

namespace {

const Catalog& catalog_data() {
    static const Catalog c = builtin_catalog();
    return c;
}

Scalar q(long n, long d) { return Scalar(Rational(n) / Rational(d)); }

std::string point_str(const ProjectivePoint& p) {
    return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ", " +
           to_string(p.z()) + ")";
}

std::string line_str(const LinearForm& l) {
    return "(" + to_string(l.a) + ", " + to_string(l.b) + ", " +
           to_string(l.c) + ")";
}

std::string sig_str(const Signature& s) {
    return "(" + std::to_string(s.n_plus) + ", " + std::to_string(s.n_minus) +
           ", " + std::to_string(s.n_zero) + ")";
}

// --- singular point search -------------------------------------------------
//
// The three partials are quadratics; eliminating one variable w from a pair
// of them yields a binary form in the remaining two whose roots contain the
// (u : v) shadows of every common zero.  Degrees in w are at most two, so
// the resultants reduce to three closed-form cases; pairs where one partial
// is w-free contribute that partial's own roots instead.

// Binary form of fixed degree d as d+1 coefficients of u^(d-i) v^i.
using BinForm = std::vector<Scalar>;

BinForm bf_mul(const BinForm& a, const BinForm& b) {
    BinForm r(a.size() + b.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

BinForm bf_sub(const BinForm& a, const BinForm& b) {
    BinForm r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

bool bf_zero(const BinForm& a) {
    return std::all_of(a.begin(), a.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

// A ternary quadratic read as  a w^2 + b(u,v) w + c(u,v)  for one choice of
// eliminated variable w (0 = x, 1 = y, 2 = z); (u, v) keep their original
// relative order.
struct WView {
    Scalar a;
    BinForm b;  // degree 1
    BinForm c;  // degree 2
};

WView w_view(const TernaryQuadratic& f, int elim) {
    switch (elim) {
        case 0:
            return {f[mon::x2], {f[mon::xy], f[mon::xz]},
                    {f[mon::y2], f[mon::yz], f[mon::z2]}};
        case 1:
            return {f[mon::y2], {f[mon::xy], f[mon::yz]},
                    {f[mon::x2], f[mon::xz], f[mon::z2]}};
        default:
            return {f[mon::z2], {f[mon::xz], f[mon::yz]},
                    {f[mon::x2], f[mon::xy], f[mon::y2]}};
    }
}

int w_degree(const WView& v) {
    if (!v.a.is_zero()) return 2;
    if (!bf_zero(v.b)) return 1;
    if (!bf_zero(v.c)) return 0;
    return -1;
}

// Resultant in w of the two views, up to sign: a binary form vanishing on
// the (u : v) shadow of every common zero.  For a w-free partial the form
// itself is returned (its roots are a superset of what is needed; the
// verification step discards extras).  nullopt when a partial vanishes
// identically.
std::optional<BinForm> resultant_form(WView p, WView q) {
    int dp = w_degree(p), dq = w_degree(q);
    if (dp < dq) {
        std::swap(p, q);
        std::swap(dp, dq);
    }
    if (dq < 0) return std::nullopt;
    if (dq == 0) return q.c;
    const BinForm pa{p.a}, qa{q.a};
    if (dp == 2 && dq == 2) {
        BinForm t1 = bf_sub(bf_mul(pa, q.c), bf_mul(p.c, qa));
        BinForm t2 = bf_sub(bf_mul(pa, q.b), bf_mul(p.b, qa));
        BinForm t3 = bf_sub(bf_mul(p.b, q.c), bf_mul(p.c, q.b));
        return bf_sub(bf_mul(t1, t1), bf_mul(t2, t3));
    }
    if (dp == 2) {
        BinForm t1 = bf_mul(pa, bf_mul(q.c, q.c));
        BinForm t2 = bf_mul(p.b, bf_mul(q.b, q.c));
        BinForm t3 = bf_mul(p.c, bf_mul(q.b, q.b));
        return bf_sub(bf_sub(t1, t2), t3);
    }
    return bf_sub(bf_mul(p.b, q.c), bf_mul(p.c, q.b));
}

// Rational projective roots (u0 : v0) of a binary form.  Tower-valued
// coefficients keep only their rational common roots: t is a rational root
// of p1 + sqrt(d) p2 exactly when it is a root of both rational parts.
void push_ratio_candidates(const BinForm& form,
                           std::vector<std::pair<Scalar, Scalar>>& out) {
    if (bf_zero(form)) return;
    if (form.back().is_zero()) out.emplace_back(Scalar(0), Scalar(1));
    std::vector<Scalar> asc(form.begin(), form.end());
    UPoly p(asc);
    UPoly target = p;
    if (!p.all_rational()) {
        std::vector<Scalar> c1, c2;
        for (const Scalar& s : form) {
            c1.emplace_back(s.rat());
            c2.emplace_back(s.rad());
        }
        target = poly_gcd(UPoly(c1), UPoly(c2));
    }
    if (target.degree() < 1) return;
    for (const auto& [root, mult] : rational_roots(target))
        out.emplace_back(Scalar(1), Scalar(root));
}

// Substitutes (u0, v0) into the three partials, solves the remaining
// univariate system in w, and appends every completed point.
void complete_candidates(const std::array<TernaryQuadratic, 3>& pd, int elim,
                         const Scalar& u0, const Scalar& v0,
                         std::vector<ProjectivePoint>& out) {
    std::vector<UPoly> polys;
    for (const TernaryQuadratic& f : pd) {
        WView v = w_view(f, elim);
        Scalar c0 = v.c[0] * u0 * u0 + v.c[1] * u0 * v0 + v.c[2] * v0 * v0;
        Scalar c1 = v.b[0] * u0 + v.b[1] * v0;
        UPoly w(std::vector<Scalar>{c0, c1, v.a});
        if (!w.is_zero()) polys.push_back(w);
    }
    if (polys.empty()) return;  // a whole singular line: reducible input
    UPoly g = polys[0];
    for (std::size_t i = 1; i < polys.size(); ++i) g = poly_gcd(g, polys[i]);
    if (g.degree() < 1) return;
    std::vector<Scalar> roots;
    if (g.all_rational()) {
        for (const auto& [root, mult] : rational_roots(g))
            roots.emplace_back(root);
    } else {
        roots = tower_roots(g).roots;
    }
    for (const Scalar& w0 : roots) {
        switch (elim) {
            case 0: out.emplace_back(w0, u0, v0); break;
            case 1: out.emplace_back(u0, w0, v0); break;
            default: out.emplace_back(u0, v0, w0); break;
        }
    }
}

// --- binary reduction --------------------------------------------------------

struct BinaryReduction {
    BinaryClassification cls;
    std::optional<std::vector<Term>> lifted;  // certificate terms, if liftable
};

Matrix from_columns(const std::vector<Vec>& columns) {
    Matrix m(3, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < 3; ++i) m.at(i, j) = columns[j][i];
    return m;
}

// For a form using at most two variables: change basis so the dead
// directions (the kernel of the transposed catalecticant) become the
// trailing coordinates, classify the resulting binary cubic, and lift its
// decomposition back through the inverse substitution.
BinaryReduction reduce_to_binary(const TernaryCubic& f) {
    std::vector<Vec> ker = kernel(catalecticant(f).transposed());
    std::vector<Vec> cols;
    const std::size_t want = 3 - ker.size();
    for (std::size_t i = 0; i < 3 && cols.size() < want; ++i) {
        Vec e(3, Scalar(0));
        e[i] = Scalar(1);
        std::vector<Vec> trial = cols;
        trial.push_back(e);
        trial.insert(trial.end(), ker.begin(), ker.end());
        if (rank(from_columns(trial)) == trial.size()) cols.push_back(e);
    }
    cols.insert(cols.end(), ker.begin(), ker.end());
    Matrix m = from_columns(cols);
    TernaryCubic g = substitute_linear(f, m);
    BinaryCubic b({g[mon::x3], g[mon::x2y], g[mon::xy2], g[mon::y3]});

    BinaryReduction out{binary_real_rank(b), std::nullopt};
    try {
        BinaryDecomposition bd = binary_decompose(b);
        Matrix mt = m.transposed();
        Vec e0(3, Scalar(0)), e1(3, Scalar(0));
        e0[0] = Scalar(1);
        e1[1] = Scalar(1);
        Vec r0 = solve(mt, e0).particular;  // first row of m^-1
        Vec r1 = solve(mt, e1).particular;  // second row of m^-1
        std::vector<Term> lifted;
        for (const BinaryTerm& t : bd.terms()) {
            lifted.push_back({t.coeff,
                              {t.form.u * r0[0] + t.form.v * r1[0],
                               t.form.u * r0[1] + t.form.v * r1[1],
                               t.form.u * r0[2] + t.form.v * r1[2]}});
        }
        out.lifted = std::move(lifted);
    } catch (const UnsupportedAlgebraicDegree&) {
        // rank decided, certificate out of reach: the caller falls back
    }
    return out;
}

// --- certificate routes ------------------------------------------------------

std::vector<Term> merge_proportional(const std::vector<Term>& in) {
    std::vector<Term> out;
    for (const Term& t : in) {
        bool merged = false;
        for (Term& o : out) {
            if (auto s = proportional(t.form, o.form)) {
                o.coeff += t.coeff * *s * *s * *s;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.coeff.is_zero(); }),
              out.end());
    return out;
}

LinearForm compose(const LinearForm& l, const Matrix& m) {
    auto col = [&](std::size_t j) {
        return l.a * m.at(0, j) + l.b * m.at(1, j) + l.c * m.at(2, j);
    };
    return {col(0), col(1), col(2)};
}

// Scaled copies of catalog witnesses: every stored decomposition whose
// target (transported through the record's change of basis when one is
// recorded) is proportional to f yields a certificate after rescaling the
// coefficients.
void catalog_certificates(const TernaryCubic& f,
                          std::vector<Decomposition>& out) {
    for (const OrbitRecord& r : catalog_data()) {
        if (!r.decomposition) continue;
        TernaryCubic target = r.decomposition_form;
        std::vector<Term> terms = *r.decomposition;
        if (r.to_normal_form) {
            target = substitute_linear(target, *r.to_normal_form);
            for (Term& t : terms) t.form = compose(t.form, *r.to_normal_form);
        }
        if (auto s = proportional(f, target)) {
            for (Term& t : terms) t.coeff *= *s;
            out.emplace_back(std::move(terms), f);
        }
    }
}

// The four-line construction through the common inflection line, for
// members of the family a(x^3+y^3+z^3) + b xyz.
void depaolis_certificate(const TernaryCubic& f,
                          std::vector<Decomposition>& out) {
    try {
        FlexLine fl = hesse_flex_line(f);
        if (fl.degenerate) return;
        out.push_back(depaolis(f, fl.line).decomposition);
    } catch (const NotHesseForm&) {
    } catch (const IndistinctIntersection&) {
    } catch (const ConeDetected&) {
    } catch (const InconsistentSystem&) {
    }
}

// Exact route for a line times a rank-two conic, diagonalised as
// alpha m^2 + beta n^2 in coordinates complementing its vertex.  An
// imaginary pair (equal signs) rewrites l m^2 and l n^2 through the
// cube-of-sum identity with the weights kept as coefficients: five cubes,
// no radicals.  A real pair (opposite signs) splits into its two lines
// with at most one square root and uses the triple-product identity:
// four cubes.
void split_pair_certificate(const TernaryCubic& f, const LinearForm& l,
                            const TernaryQuadratic& conic,
                            const ProjectivePoint& vertex,
                            std::vector<Decomposition>& out) {
    const std::array<Scalar, 3> vc = {vertex.x(), vertex.y(), vertex.z()};
    std::size_t pivot = 0;
    while (vc[pivot].is_zero()) ++pivot;
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == pivot) continue;
        Vec e(3, Scalar(0));
        e[i] = Scalar(1);
        cols.push_back(e);
    }
    cols.push_back({vc[0], vc[1], vc[2]});
    Matrix mt = from_columns(cols).transposed();
    Vec e0(3, Scalar(0)), e1(3, Scalar(0));
    e0[0] = Scalar(1);
    e1[1] = Scalar(1);
    Vec r0 = solve(mt, e0).particular;  // dual coordinates of the two
    Vec r1 = solve(mt, e1).particular;  // directions complementing the vertex
    const LinearForm s{r0[0], r0[1], r0[2]};
    const LinearForm t{r1[0], r1[1], r1[2]};

    // The vertex direction drops out: conic = A s^2 + B s t + C t^2.
    const Vec& es = cols[0];
    const Vec& et = cols[1];
    Scalar A = conic.eval(es[0], es[1], es[2]);
    Scalar C = conic.eval(et[0], et[1], et[2]);
    Scalar B = conic.eval(es[0] + et[0], es[1] + et[1], es[2] + et[2]) - A - C;

    Scalar alpha, beta;
    LinearForm m, n;
    if (!A.is_zero()) {
        alpha = A;
        beta = C - B * B / (Scalar(4) * A);
        m = s + t.scaled(B / (Scalar(2) * A));
        n = t;
    } else if (!C.is_zero()) {
        alpha = C;
        beta = -(B * B) / (Scalar(4) * C);
        m = t + s.scaled(B / (Scalar(2) * C));
        n = s;
    } else {
        alpha = B * q(1, 4);
        beta = -alpha;
        m = s + t;
        n = s - t;
    }
    if (alpha.is_zero() || beta.is_zero()) return;  // not a genuine pair

    if ((alpha.sign() > 0) == (beta.sign() > 0)) {
        std::vector<Term> terms = {{alpha * q(1, 6), l + m},
                                   {alpha * q(1, 6), l - m},
                                   {alpha * q(-1, 3), l},
                                   {beta * q(1, 6), l + n},
                                   {beta * q(1, 6), l - n},
                                   {beta * q(-1, 3), l}};
        out.emplace_back(merge_proportional(terms), f);
        return;
    }

    // conic = alpha (m + r n)(m - r n) with r^2 = -beta/alpha > 0; bail out
    // when that root would stack a second radical on a tower input.
    QuadraticRoots root = solve_quadratic(Scalar(1), Scalar(0), beta / alpha);
    if (root.status != QuadraticRoots::Status::RealPair) return;
    const LinearForm u = m + n.scaled(root.second);
    const LinearForm v = m - n.scaled(root.second);
    const Scalar c = alpha * q(1, 24);
    std::vector<Term> terms = {{c, l + u + v},
                               {-c, (l + u) - v},
                               {-c, (l - u) + v},
                               {c, (l - u) - v}};
    out.emplace_back(merge_proportional(terms), f);
}

// Best-effort five-cube search: peel c l^3 for (c, l) from a small grid and
// try the four-line construction on the remainder against a small grid of
// probe lines.  First success wins; failure is silent by design.
void peel_certificate(const TernaryCubic& f, std::vector<Decomposition>& out) {
    std::vector<LinearForm> peel;
    for (long b = -1; b <= 1; ++b)
        for (long c = -1; c <= 1; ++c)
            peel.push_back({Scalar(1), Scalar(b), Scalar(c)});
    for (long c = -1; c <= 1; ++c) peel.push_back({Scalar(0), Scalar(1), Scalar(c)});
    peel.push_back({Scalar(0), Scalar(0), Scalar(1)});

    const std::vector<LinearForm> probes = {
        {Scalar(1), Scalar(0), Scalar(0)},  {Scalar(0), Scalar(1), Scalar(0)},
        {Scalar(0), Scalar(0), Scalar(1)},  {Scalar(1), Scalar(1), Scalar(0)},
        {Scalar(1), Scalar(-1), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(1)},
        {Scalar(1), Scalar(0), Scalar(-1)}, {Scalar(0), Scalar(1), Scalar(1)},
        {Scalar(0), Scalar(1), Scalar(-1)}, {Scalar(1), Scalar(1), Scalar(1)},
    };
    const std::vector<Scalar> weights = {q(1, 1),  q(-1, 1), q(2, 1),  q(-2, 1),
                                         q(3, 1),  q(-3, 1), q(1, 2),  q(-1, 2),
                                         q(1, 3),  q(-1, 3), q(1, 6),  q(-1, 6)};
    for (const LinearForm& l : peel) {
        for (const Scalar& c : weights) {
            TernaryCubic rest = f - cube(l).scaled(c);
            if (rest.is_zero()) continue;
            for (const LinearForm& probe : probes) {
                try {
                    DePaolisResult dp = depaolis(rest, probe);
                    std::vector<Term> terms = dp.decomposition.terms();
                    terms.push_back({c, l});
                    terms = merge_proportional(terms);
                    out.emplace_back(std::move(terms), f);
                    return;
                } catch (const IndistinctIntersection&) {
                } catch (const ConeDetected&) {
                } catch (const InconsistentSystem&) {
                }
            }
        }
    }
}

} // namespace

std::optional<ProjectivePoint> singular_point(const TernaryCubic& f) {
    const std::array<TernaryQuadratic, 3> pd = {
        partial(f, Var::X), partial(f, Var::Y), partial(f, Var::Z)};
    auto singular_at = [&](const ProjectivePoint& p) {
        return std::all_of(pd.begin(), pd.end(), [&](const TernaryQuadratic& g) {
            return g.eval(p.x(), p.y(), p.z()).is_zero();
        });
    };

    std::vector<ProjectivePoint> candidates;
    candidates.emplace_back(Scalar(1), Scalar(0), Scalar(0));
    candidates.emplace_back(Scalar(0), Scalar(1), Scalar(0));
    candidates.emplace_back(Scalar(0), Scalar(0), Scalar(1));
    for (int elim : {2, 1, 0}) {
        const std::array<WView, 3> views = {
            w_view(pd[0], elim), w_view(pd[1], elim), w_view(pd[2], elim)};
        std::vector<std::pair<Scalar, Scalar>> ratios;
        constexpr std::array<std::pair<int, int>, 3> pairs = {
            {{0, 1}, {0, 2}, {1, 2}}};
        for (const auto& [i, j] : pairs) {
            if (auto r = resultant_form(views[i], views[j]))
                push_ratio_candidates(*r, ratios);
        }
        for (const auto& [u0, v0] : ratios)
            complete_candidates(pd, elim, u0, v0, candidates);
    }
    for (const ProjectivePoint& p : candidates)
        if (singular_at(p)) return p;
    return std::nullopt;
}

TangentCone tangent_cone_type(const TernaryCubic& f, const ProjectivePoint& p) {
    const std::array<Scalar, 3> pc = {p.x(), p.y(), p.z()};
    std::size_t pivot = 0;
    while (pc[pivot].is_zero()) ++pivot;
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == pivot) continue;
        Vec e(3, Scalar(0));
        e[i] = Scalar(1);
        cols.push_back(e);
    }
    cols.push_back({pc[0], pc[1], pc[2]});
    TernaryCubic g = substitute_linear(f, from_columns(cols));
    if (!g[mon::z3].is_zero() || !g[mon::xz2].is_zero() ||
        !g[mon::yz2].is_zero())
        throw std::invalid_argument("point is not a double point of the cubic");
    const Scalar& q20 = g[mon::x2z];
    const Scalar& q11 = g[mon::xyz];
    const Scalar& q02 = g[mon::y2z];
    if (q20.is_zero() && q11.is_zero() && q02.is_zero())
        throw std::invalid_argument("point is not a double point of the cubic");
    int s = (q11 * q11 - Scalar(4) * q20 * q02).sign();
    if (s > 0) return TangentCone::Node;
    if (s < 0) return TangentCone::Punctata;
    return TangentCone::Cusp;
}

Decomposition identity_rewrite_upper_bound(const TernaryCubic& f) {
    const LinearForm X{Scalar(1), Scalar(0), Scalar(0)};
    const LinearForm Y{Scalar(0), Scalar(1), Scalar(0)};
    const LinearForm Z{Scalar(0), Scalar(0), Scalar(1)};

    std::vector<Term> raw;
    auto cube_rule = [&](std::size_t idx, const LinearForm& a) {
        if (!f[idx].is_zero()) raw.push_back({f[idx], a});
    };
    auto square_rule = [&](std::size_t idx, const LinearForm& a,
                           const LinearForm& b) {
        const Scalar& c = f[idx];
        if (c.is_zero()) return;
        raw.push_back({c * q(1, 6), b + a});
        raw.push_back({c * q(1, 6), b - a});
        raw.push_back({c * q(-1, 3), b});
    };
    cube_rule(mon::x3, X);
    square_rule(mon::x2y, X, Y);
    square_rule(mon::x2z, X, Z);
    square_rule(mon::xy2, Y, X);
    if (!f[mon::xyz].is_zero()) {
        const Scalar c = f[mon::xyz] * q(1, 24);
        raw.push_back({c, X + Y + Z});
        raw.push_back({-c, (X + Y) - Z});
        raw.push_back({-c, (X - Y) + Z});
        raw.push_back({c, (X - Y) - Z});
    }
    square_rule(mon::xz2, Z, X);
    cube_rule(mon::y3, Y);
    square_rule(mon::y2z, Y, Z);
    square_rule(mon::yz2, Z, Y);
    cube_rule(mon::z3, Z);
    return Decomposition(merge_proportional(raw), f);
}

ClassificationReport classify(const TernaryCubic& f,
                              const ClassificationOptions& options) {
    if (f.is_zero()) throw ZeroForm();
    ClassificationReport rep;
    auto note = [&](std::string test, std::string outcome) {
        rep.evidence.emplace_back(std::move(test), std::move(outcome));
    };

    const std::size_t ess = essential_variables(f);
    note("essential variables", std::to_string(ess));

    int row = 0;
    std::optional<std::vector<Term>> binary_terms;
    std::optional<std::pair<LinearForm, TernaryQuadratic>> split;
    std::optional<ProjectivePoint> pair_vertex;
    if (ess <= 2) {
        note("hessian", hessian(f).is_zero() ? "vanishes identically" : "nonzero");
        BinaryReduction br = reduce_to_binary(f);
        note("binary discriminant", to_string(br.cls.discriminant));
        switch (br.cls.orbit) {
            case BinaryOrbit::PerfectCube:
                row = 1;
                note("binary orbit", "perfect cube");
                break;
            case BinaryOrbit::GenericPositive:
                row = 2;
                note("binary orbit", "one real root");
                break;
            case BinaryOrbit::GenericNegative:
                row = 3;
                note("binary orbit", "three real roots");
                break;
            case BinaryOrbit::TangentSurface:
                row = 4;
                note("binary orbit", "repeated root");
                break;
        }
        binary_terms = std::move(br.lifted);
    } else if ((split = factor_out_line(f))) {
        note("linear factor", line_str(split->first));
        LineConicReport lc = line_conic_position(split->first, split->second);
        note("conic signature", sig_str(lc.conic_signature));
        switch (lc.position) {
            case LineConicPosition::ConicImaginary:
                row = 5;
                note("line position", "conic has no real points");
                break;
            case LineConicPosition::External:
                row = 6;
                note("line position", "external");
                break;
            case LineConicPosition::Secant:
                row = 7;
                note("line position", "secant");
                break;
            case LineConicPosition::Tangent:
                row = 8;
                note("line position", "tangent");
                break;
            case LineConicPosition::Degenerate:
                note("line position", "conic degenerates");
                if (lc.vertex) {
                    const LinearForm& l = split->first;
                    bool on = (l.a * lc.vertex->x() + l.b * lc.vertex->y() +
                               l.c * lc.vertex->z())
                                  .is_zero();
                    note("pair vertex", point_str(*lc.vertex));
                    note("vertex on line", on ? "yes" : "no");
                    pair_vertex = lc.vertex;
                    row = lc.real_pair ? (on ? 3 : 16) : (on ? 2 : 12);
                } else if (lc.double_line) {
                    // a repeated line uses two variables at most, so this is
                    // unreachable after the binary branch; mapped anyway
                    row = proportional(split->first, *lc.double_line) ? 1 : 4;
                }
                break;
        }
    } else {
        InvariantPair st = aronhold_ST(f);
        Scalar delta = st.discriminant();
        note("S", to_string(st.S));
        note("T", to_string(st.T));
        note("discriminant", to_string(delta));
        if (delta.sign() != 0) {
            if (st.S.sign() != 0)
                row = 11;
            else
                row = st.T.sign() > 0 ? 9 : 10;
        } else if (auto p = singular_point(f)) {
            note("singular point", point_str(*p));
            switch (tangent_cone_type(f, *p)) {
                case TangentCone::Node:
                    row = 14;
                    note("tangent cone", "two real tangents");
                    break;
                case TangentCone::Cusp:
                    row = 13;
                    note("tangent cone", "repeated tangent");
                    break;
                case TangentCone::Punctata:
                    row = 15;
                    note("tangent cone", "imaginary tangents");
                    break;
            }
        } else {
            // Singular (zero discriminant) yet without a tower-representable
            // singular point: a triangle of lines conjugate over a cubic
            // field.  Refuse to guess.
            note("singular point", "none inside the tower");
        }
    }

    const OrbitRecord* rec = nullptr;
    if (row != 0) {
        rec = &record_by_id(catalog_data(), std::to_string(row));
        rep.orbit_id = row;
        rep.rk_real = rec->rk_real;
        rep.brk_real = rec->brk_real;
    }

    rep.rank_lower_bound = {static_cast<int>(ess), "catalecticant rank"};
    if (rec && rec->rk_complex > rep.rank_lower_bound.value)
        rep.rank_lower_bound = {rec->rk_complex,
                                "complex rank of the matched orbit"};

    std::vector<Decomposition> cands;
    if (binary_terms) cands.emplace_back(*binary_terms, f);
    depaolis_certificate(f, cands);
    catalog_certificates(f, cands);
    if (split && pair_vertex)
        split_pair_certificate(f, split->first, split->second, *pair_vertex,
                               cands);
    if (options.search_rank5_certificate && rec && rec->rk_real &&
        *rec->rk_real == 5)
        peel_certificate(f, cands);
    cands.push_back(identity_rewrite_upper_bound(f));
    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i].size() < cands[best].size()) best = i;
    rep.certificate = std::move(cands[best]);
    return rep;
}

RankBounds rank_bounds(const TernaryCubic& f,
                       const ClassificationOptions& options) {
    ClassificationReport rep = classify(f, options);
    return {std::move(rep.rank_lower_bound), std::move(rep.certificate)};
}

} // namespace cubicrank
