#include "cubicrank/catalog.hpp"

#include "cubicrank/covariants.hpp"

#include <map>
#include <utility>

namespace cubicrank {

VerificationFailed::VerificationFailed(const std::string& what)
    : std::runtime_error(what) {}

CatalogParseError::CatalogParseError(std::size_t line, const std::string& what)
    : std::runtime_error("catalog line " + std::to_string(line) + ": " + what) {}

// --- builtin data -----------------------------------------------------------

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

// a/b + c/e * sqrt(r)
Scalar quad(long a, long b, long c, long e, long r) {
    return Scalar(Rational(a, b), Rational(c, e), Int(r));
}

TernaryCubic cub(std::array<long, 10> m) {
    std::array<Scalar, 10> c;
    for (std::size_t i = 0; i < 10; ++i) c[i] = q(m[i]);
    return TernaryCubic(c);
}

LinearForm lin(long a, long b, long c) { return {q(a), q(b), q(c)}; }

Term t(Scalar coeff, LinearForm form) {
    return {std::move(coeff), std::move(form)};
}

Matrix rows3(std::array<long, 9> e) {
    std::vector<Scalar> v;
    v.reserve(9);
    for (long x : e) v.push_back(q(x));
    return Matrix(3, 3, std::move(v));
}

OrbitRecord base_record(std::string id, std::string description,
                        TernaryCubic normal_form, int rk_complex,
                        int brk_complex, std::string hessian_description,
                        HessianCheck check, TernaryCubic hessian_expected) {
    OrbitRecord r;
    r.id = std::move(id);
    r.description = std::move(description);
    r.normal_form = std::move(normal_form);
    r.rk_complex = rk_complex;
    r.brk_complex = brk_complex;
    r.hessian_description = std::move(hessian_description);
    r.hessian_check = check;
    r.hessian_expected = std::move(hessian_expected);
    r.decomposition_form = r.normal_form;
    return r;
}

OrbitRecord real_row(std::string id, std::string description,
                     TernaryCubic normal_form, int rk, int brk, int rk_complex,
                     int brk_complex, std::string hessian_description,
                     HessianCheck check, TernaryCubic hessian_expected) {
    OrbitRecord r = base_record(std::move(id), std::move(description),
                                std::move(normal_form), rk_complex, brk_complex,
                                std::move(hessian_description), check,
                                std::move(hessian_expected));
    r.rk_real = rk;
    r.brk_real = brk;
    return r;
}

OrbitRecord complex_row(std::string id, std::string description,
                        TernaryCubic normal_form, int rk, int brk,
                        std::string hessian_description, HessianCheck check,
                        TernaryCubic hessian_expected,
                        std::vector<std::string> correspondence) {
    OrbitRecord r = base_record(std::move(id), std::move(description),
                                std::move(normal_form), rk, brk,
                                std::move(hessian_description), check,
                                std::move(hessian_expected));
    r.complex_correspondence = std::move(correspondence);
    return r;
}

} // namespace

Catalog builtin_catalog() {
    const TernaryCubic none;
    Catalog cat;
    cat.reserve(26);

    // Real orbits 1..16.  Every stored witness re-expands exactly; run
    // verify_all for the proof.
    {
        OrbitRecord r = real_row("1", "triple line",
                                 cub({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}), 1, 1, 1, 1,
                                 "zero", HessianCheck::Zero, none);
        r.decomposition = std::vector<Term>{t(q(1), lin(1, 0, 0))};
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("2", "three concurrent lines, two imaginary",
                                 cub({1, 0, 0, 1, 0, 0, 0, 0, 0, 0}), 2, 2, 2, 2,
                                 "zero", HessianCheck::Zero, none);
        r.decomposition = std::vector<Term>{t(q(1), lin(1, 0, 0)), t(q(1), lin(0, 1, 0))};
        r.decomposition_form = cub({1, 0, 0, 0, 0, 0, 1, 0, 0, 0});
        r.note = "the witness targets x^3 + y^3, an equivalent representative; "
                 "the change of basis onto the normal form needs sqrt(3), so "
                 "none is stored";
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("3", "three concurrent real lines",
                                 cub({1, 0, 0, -1, 0, 0, 0, 0, 0, 0}), 3, 3, 2, 2,
                                 "zero", HessianCheck::Zero, none);
        r.decomposition = std::vector<Term>{t(q(4, 3), lin(1, 0, 0)), t(q(-1, 6), lin(1, 1, 0)),
                            t(q(-1, 6), lin(1, -1, 0))};
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("4", "double line and a line",
                                 cub({0, 1, 0, 0, 0, 0, 0, 0, 0, 0}), 3, 2, 3, 2,
                                 "zero", HessianCheck::Zero, none);
        r.decomposition = std::vector<Term>{t(q(1, 6), lin(1, 1, 0)), t(q(1, 6), lin(-1, 1, 0)),
                            t(q(-1, 3), lin(0, 1, 0))};
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("5", "imaginary conic and a line",
                                 cub({1, 0, 0, 1, 0, 1, 0, 0, 0, 0}), 4, 4, 4, 4,
                                 "x*(3x^2 - y^2 - z^2)",
                                 HessianCheck::ProportionalTo,
                                 cub({3, 0, 0, -1, 0, -1, 0, 0, 0, 0}));
        const Scalar root2 = quad(0, 1, 1, 1, 2);
        r.decomposition = std::vector<Term>{t(q(1, 6), lin(1, 0, 1)), t(q(-1, 6), lin(-1, 0, 1)),
                            t(quad(0, 1, 1, 12, 2), {root2, q(-1), q(0)}),
                            t(quad(0, 1, -1, 12, 2), {-root2, q(-1), q(0)})};
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("6", "real conic and an external line",
                                 cub({0, 0, 1, 0, 0, 0, 0, 1, 0, -1}), 5, 4, 4, 4,
                                 "-z*(x^2 + y^2 + 3z^2)",
                                 HessianCheck::ProportionalTo,
                                 cub({0, 0, -1, 0, 0, 0, 0, -1, 0, -3}));
        r.decomposition = std::vector<Term>{t(q(1, 6), lin(1, 0, 1)), t(q(-1, 6), lin(1, 0, -1)),
                            t(q(1, 6), lin(0, 1, 1)), t(q(-1, 6), lin(0, 1, -1)),
                            t(q(-5, 3), lin(0, 0, 1))};
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("7", "real conic and a secant line",
                                 cub({0, 1, 0, 0, 0, 0, 1, 0, -1, 0}), 4, 4, 4, 4,
                                 "y*(x^2 - 3y^2 - z^2)",
                                 HessianCheck::ProportionalTo,
                                 cub({0, 1, 0, 0, 0, 0, -3, 0, -1, 0}));
        r.decomposition = std::vector<Term>{t(q(1, 96), lin(1, 4, 1)), t(q(1, 96), lin(-1, 4, -1)),
                            t(q(-1, 48), lin(1, 2, -1)),
                            t(q(-1, 48), lin(-1, 2, 1))};
        r.decomposition_form = cub({0, 0, 0, 0, 1, 0, 1, 0, 0, 0});
        r.to_normal_form = rows3({1, 0, 1, 0, 1, 0, 1, 0, -1});
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("8", "real conic and a tangent line",
                                 cub({0, 18, 0, 0, 0, 0, 0, 18, 0, 0}), 5, 3, 5, 3,
                                 "a perfect cube, proportional to y^3",
                                 HessianCheck::PerfectCube, none);
        r.decomposition = std::vector<Term>{t(q(1), lin(-1, 3, 0)), t(q(1), lin(1, 3, 0)),
                            t(q(3), lin(0, -2, 1)), t(q(3), lin(0, -4, 1)),
                            t(q(-6), lin(0, -3, 1))};
        r.note = "hessian checked as the cube of a single line rather than "
                 "against a pinned multiple";
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("9", "real Fermat cubic",
                                 cub({1, 0, 0, 0, 0, 0, 1, 0, 0, 1}), 3, 3, 3, 3,
                                 "x*y*z", HessianCheck::ProportionalTo,
                                 cub({0, 0, 0, 0, 1, 0, 0, 0, 0, 0}));
        r.decomposition = std::vector<Term>{t(q(1), lin(1, 0, 0)), t(q(1), lin(0, 1, 0)),
                            t(q(1), lin(0, 0, 1))};
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("10", "imaginary Fermat cubic",
                                 cub({1, 0, 0, 0, 6, 0, 1, 0, 0, 1}), 4, 3, 3, 3,
                                 "x^3 + y^3 + z^3 - 3*x*y*z",
                                 HessianCheck::ProportionalTo,
                                 cub({1, 0, 0, 0, -3, 0, 1, 0, 0, 1}));
        r.decomposition = std::vector<Term>{t(q(1), lin(1, 0, 0)), t(q(-1), lin(0, 1, 1)),
                            t(q(-1), lin(0, 1, -1)), t(q(4), lin(0, 1, 0))};
        r.decomposition_form = cub({1, 0, 0, 0, 0, 0, 2, 0, -6, 0});
        r.note = "the witness targets x^3 + 2y^3 - 6yz^2; it shares the "
                 "invariant signature S = 0, T < 0 with the normal form, and "
                 "no rational change of basis is stored";
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("11", "smooth Hesse pencil member (lambda = 2)",
                                 cub({1, 0, 0, 0, 12, 0, 1, 0, 0, 1}), 4, 4, 4, 4,
                                 "-4*(x^3 + y^3 + z^3) + 17*x*y*z",
                                 HessianCheck::ProportionalTo,
                                 cub({-4, 0, 0, 0, 17, 0, -4, 0, 0, -4}));
        r.decomposition = std::vector<Term>{t(q(14, 25), lin(1, 1, 1)), t(q(1, 25), lin(3, -2, -2)),
                            t(q(1, 25), lin(-2, 3, -2)),
                            t(q(1, 25), lin(-2, -2, 3))};
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("12", "imaginary triangle",
                                 cub({1, 0, 0, 0, -3, 0, 1, 0, 0, 1}), 5, 4, 4, 4,
                                 "proportional to the form itself",
                                 HessianCheck::ProportionalTo,
                                 cub({1, 0, 0, 0, -3, 0, 1, 0, 0, 1}));
        r.note = "rank over R is recorded without an explicit five-cube witness";
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("13", "cuspidal cubic",
                                 cub({-1, 0, 0, 0, 0, 0, 0, 1, 0, 0}), 4, 3, 4, 3,
                                 "x*y^2", HessianCheck::ProportionalTo,
                                 cub({0, 0, 0, 1, 0, 0, 0, 0, 0, 0}));
        r.decomposition = std::vector<Term>{t(q(1, 6), lin(0, 1, 1)), t(q(-1, 6), lin(0, 1, -1)),
                            t(q(-1, 3), lin(0, 0, 1)), t(q(-1), lin(1, 0, 0))};
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("14", "nodal cubic",
                                 cub({1, 0, 0, 0, -3, 0, 1, 0, 0, 0}), 4, 4, 4, 4,
                                 "x^3 + y^3 + x*y*z",
                                 HessianCheck::ProportionalTo,
                                 cub({1, 0, 0, 0, 1, 0, 1, 0, 0, 0}));
        r.decomposition = std::vector<Term>{t(q(1, 8), lin(2, 0, 1)), t(q(1, 8), lin(0, 2, 1)),
                            t(quad(0, 1, 1, 5, 5),
                              {q(1), q(1), quad(1, 4, -1, 4, 5)}),
                            t(quad(0, 1, -1, 5, 5),
                              {q(1), q(1), quad(1, 4, 1, 4, 5)})};
        r.note = "the two radical coefficients were re-solved exactly from the "
                 "four fixed lines (they come out to +-sqrt(5)/5)";
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("15", "acnodal cubic (isolated real point)",
                                 cub({-1, 0, 1, 0, 0, 0, 0, 1, 0, 0}), 4, 4, 4, 4,
                                 "3*x*y^2 - x^2*z - y^2*z",
                                 HessianCheck::ProportionalTo,
                                 cub({0, 0, -1, 3, 0, 0, 0, -1, 0, 0}));
        const Scalar root2 = quad(0, 1, 1, 1, 2);
        r.decomposition = std::vector<Term>{t(q(-1, 24), lin(-2, 0, 2)), t(q(-1, 48), lin(4, 0, -2)),
                            t(q(1, 12), {q(0), root2, q(1)}),
                            t(q(-1, 12), {q(0), root2, q(-1)})};
        cat.push_back(std::move(r));
    }
    {
        OrbitRecord r = real_row("16", "real triangle",
                                 cub({0, 0, 0, 0, 1, 0, 0, 0, 0, 0}), 4, 4, 4, 4,
                                 "x*y*z", HessianCheck::ProportionalTo,
                                 cub({0, 0, 0, 0, 1, 0, 0, 0, 0, 0}));
        r.decomposition = std::vector<Term>{t(q(1, 24), lin(1, 1, 1)), t(q(-1, 24), lin(-1, 1, 1)),
                            t(q(-1, 24), lin(1, -1, 1)),
                            t(q(-1, 24), lin(1, 1, -1))};
        cat.push_back(std::move(r));
    }

    // Complex orbits C1..C10 with the real ids that land in each.
    cat.push_back(complex_row("C1", "triple line",
                              cub({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}), 1, 1, "zero",
                              HessianCheck::Zero, none, {"1"}));
    cat.push_back(complex_row("C2", "three concurrent lines",
                              cub({0, 1, 0, 1, 0, 0, 0, 0, 0, 0}), 2, 2, "zero",
                              HessianCheck::Zero, none, {"2", "3"}));
    cat.push_back(complex_row("C3", "double line and a line",
                              cub({0, 1, 0, 0, 0, 0, 0, 0, 0, 0}), 3, 2, "zero",
                              HessianCheck::Zero, none, {"4"}));
    cat.push_back(complex_row("C4", "conic and a secant line",
                              cub({1, 0, 0, 0, 1, 0, 0, 0, 0, 0}), 4, 4,
                              "3*x^3 - x*y*z", HessianCheck::ProportionalTo,
                              cub({3, 0, 0, 0, -1, 0, 0, 0, 0, 0}),
                              {"5", "6", "7"}));
    {
        OrbitRecord r = complex_row("C5", "conic and a tangent line",
                                    cub({0, 1, 0, 0, 0, 0, 0, 1, 0, 0}), 5, 3,
                                    "a perfect cube, proportional to y^3",
                                    HessianCheck::PerfectCube, none, {"8"});
        r.note = "hessian checked as the cube of a single line rather than "
                 "against a pinned multiple";
        cat.push_back(std::move(r));
    }
    cat.push_back(complex_row("C6", "smooth equianharmonic (Fermat)",
                              cub({-1, 0, 0, 0, 0, 0, 0, 1, 0, -1}), 3, 3,
                              "x*y^2 + 3*x*z^2", HessianCheck::ProportionalTo,
                              cub({0, 0, 0, 1, 0, 3, 0, 0, 0, 0}),
                              {"9", "10"}));
    cat.push_back(complex_row("C7", "nodal cubic",
                              cub({-1, 0, -1, 0, 0, 0, 0, 1, 0, 0}), 4, 4,
                              "3*x*y^2 - x^2*z + y^2*z",
                              HessianCheck::ProportionalTo,
                              cub({0, 0, -1, 3, 0, 0, 0, 1, 0, 0}),
                              {"14", "15"}));
    cat.push_back(complex_row("C8", "cuspidal cubic",
                              cub({-1, 0, 0, 0, 0, 0, 0, 1, 0, 0}), 4, 3,
                              "x*y^2", HessianCheck::ProportionalTo,
                              cub({0, 0, 0, 1, 0, 0, 0, 0, 0, 0}), {"13"}));
    cat.push_back(complex_row("C9", "smooth Hesse pencil member (lambda = 2)",
                              cub({1, 0, 0, 0, 12, 0, 1, 0, 0, 1}), 4, 4,
                              "-4*(x^3 + y^3 + z^3) + 17*x*y*z",
                              HessianCheck::ProportionalTo,
                              cub({-4, 0, 0, 0, 17, 0, -4, 0, 0, -4}), {"11"}));
    cat.push_back(complex_row("C10", "triangle",
                              cub({0, 0, 0, 0, 1, 0, 0, 0, 0, 0}), 4, 4,
                              "x*y*z", HessianCheck::ProportionalTo,
                              cub({0, 0, 0, 0, 1, 0, 0, 0, 0, 0}),
                              {"12", "16"}));
    return cat;
}

const OrbitRecord& record_by_id(const Catalog& catalog, const std::string& id) {
    for (const OrbitRecord& r : catalog)
        if (r.id == id) return r;
    throw std::out_of_range("no catalog record with id " + id);
}

// --- verification -----------------------------------------------------------

namespace {

std::string cubic_str(const TernaryCubic& f) {
    std::string out;
    for (std::size_t i = 0; i < 10; ++i) {
        if (i) out += ' ';
        out += to_string(f[i]);
    }
    return out;
}

[[noreturn]] void fail_entry(const std::string& id, const std::string& what) {
    throw VerificationFailed("record " + id + ": " + what);
}

} // namespace

VerificationReport verify_entry(const OrbitRecord& record) {
    VerificationReport rep;
    rep.id = record.id;
    rep.note = record.note;

    if (record.decomposition) {
        rep.terms = record.decomposition->size();
        TernaryCubic sum = expand_cubes(*record.decomposition);
        if (!(sum == record.decomposition_form))
            fail_entry(record.id, "stored cubes expand to [" + cubic_str(sum) +
                                      "], the target is [" +
                                      cubic_str(record.decomposition_form) + "]");
        rep.expansion_checked = true;

        if (!record.rk_real)
            fail_entry(record.id, "witness stored on a row without a real rank");
        if (static_cast<int>(rep.terms) != *record.rk_real)
            fail_entry(record.id,
                       "witness has " + std::to_string(rep.terms) +
                           " terms, the recorded rank is " +
                           std::to_string(*record.rk_real));
        rep.length_checked = true;
    }

    if (record.to_normal_form) {
        TernaryCubic moved =
            substitute_linear(record.decomposition_form, *record.to_normal_form);
        if (!proportional(moved, record.normal_form))
            fail_entry(record.id,
                       "transported witness target [" + cubic_str(moved) +
                           "] is not a multiple of the normal form [" +
                           cubic_str(record.normal_form) + "]");
        rep.transport_checked = true;
    } else if (record.decomposition &&
               !(record.decomposition_form == record.normal_form) &&
               record.note.empty()) {
        fail_entry(record.id, "witness targets a different representative with "
                              "neither a change of basis nor a note");
    }

    const TernaryCubic h = hessian(record.normal_form);
    switch (record.hessian_check) {
    case HessianCheck::Zero:
        if (!h.is_zero())
            fail_entry(record.id,
                       "hessian [" + cubic_str(h) + "] is not identically zero");
        break;
    case HessianCheck::ProportionalTo:
        if (record.hessian_expected.is_zero())
            fail_entry(record.id, "no expected hessian stored");
        if (!proportional(h, record.hessian_expected))
            fail_entry(record.id,
                       "hessian [" + cubic_str(h) + "] is not a multiple of [" +
                           cubic_str(record.hessian_expected) + "]");
        break;
    case HessianCheck::PerfectCube: {
        if (h.is_zero())
            fail_entry(record.id, "hessian is zero, not a cube of a line");
        auto split = factor_out_line(h);
        if (!split ||
            !proportional(split->second, mul_ll(split->first, split->first)))
            fail_entry(record.id, "hessian [" + cubic_str(h) +
                                      "] is not the cube of a linear form");
        break;
    }
    }
    rep.hessian_checked = true;
    return rep;
}

namespace {

[[noreturn]] void throw_aggregated(const std::vector<std::string>& failures) {
    std::string all = std::to_string(failures.size()) + " failure(s):";
    for (const std::string& f : failures) all += "\n  " + f;
    throw VerificationFailed(all);
}

} // namespace

CatalogSummary verify_all(const Catalog& catalog) {
    CatalogSummary summary;
    std::vector<std::string> failures;

    for (const OrbitRecord& r : catalog) {
        (r.is_real() ? summary.real_records : summary.complex_records) += 1;
        try {
            summary.reports.push_back(verify_entry(r));
            if (r.decomposition) ++summary.witnesses_checked;
        } catch (const VerificationFailed& e) {
            failures.emplace_back(e.what());
        }
    }

    auto cross = [&](bool ok, std::string what) {
        ++summary.cross_checks;
        if (!ok) failures.push_back(std::move(what));
    };

    // Ids are complete and unique.  The id-addressed checks below only run
    // when this holds; their failures would be noise otherwise.
    std::map<std::string, int> count;
    for (const OrbitRecord& r : catalog) ++count[r.id];
    std::vector<std::string> expected_ids;
    for (int i = 1; i <= 16; ++i) expected_ids.push_back(std::to_string(i));
    for (int i = 1; i <= 10; ++i) expected_ids.push_back("C" + std::to_string(i));
    bool ids_ok = catalog.size() == expected_ids.size();
    for (const std::string& id : expected_ids) {
        cross(count[id] == 1, "id " + id + " appears " +
                                  std::to_string(count[id]) + " times");
        ids_ok = ids_ok && count[id] == 1;
    }
    cross(catalog.size() == expected_ids.size(),
          "catalog holds " + std::to_string(catalog.size()) + " records");
    if (!ids_ok) throw_aggregated(failures);

    // Rank inequalities, field by field, on every real row.
    for (const OrbitRecord& r : catalog) {
        if (!r.is_real()) continue;
        cross(*r.rk_real >= r.rk_complex,
              "row " + r.id + ": real rank below complex rank");
        cross(*r.brk_real >= r.brk_complex,
              "row " + r.id + ": real border rank below complex border rank");
        cross(*r.rk_real >= *r.brk_real,
              "row " + r.id + ": real rank below real border rank");
        cross(r.rk_complex >= r.brk_complex,
              "row " + r.id + ": complex rank below complex border rank");
        cross(r.brk_complex >= 1, "row " + r.id + ": border rank below 1");
        cross(r.complex_correspondence.empty(),
              "row " + r.id + ": real row carries a correspondence list");
    }

    // The recorded rank vs border-rank gaps on the rows where the gap is the
    // point of the row.
    auto gap = [&](const std::string& id) {
        const OrbitRecord& r = record_by_id(catalog, id);
        return *r.rk_real - *r.brk_real;
    };
    cross(gap("8") == 2, "row 8: rank gap is not 2");
    cross(gap("6") == 1, "row 6: rank gap is not 1");
    cross(gap("12") == 1, "row 12: rank gap is not 1");

    // Correspondence lists partition the real ids, and complex ranks agree
    // across each pairing.
    std::map<std::string, int> seen;
    for (const OrbitRecord& r : catalog) {
        if (r.is_real()) continue;
        cross(!r.complex_correspondence.empty(),
              "row " + r.id + ": empty correspondence list");
        for (const std::string& id : r.complex_correspondence) {
            const OrbitRecord& real = record_by_id(catalog, id);
            ++seen[id];
            cross(real.is_real(),
                  "row " + r.id + ": corresponding id " + id + " is not real");
            cross(real.rk_complex == r.rk_complex &&
                      real.brk_complex == r.brk_complex,
                  "row " + r.id + ": complex ranks disagree with row " + id);
        }
    }
    for (int i = 1; i <= 16; ++i) {
        const std::string id = std::to_string(i);
        cross(seen[id] == 1, "real id " + id + " appears in " +
                                 std::to_string(seen[id]) +
                                 " correspondence lists");
    }

    // Coefficient field of each witness: plain rationals everywhere except
    // the three rows that genuinely need one radical.
    for (const OrbitRecord& r : catalog) {
        if (!r.decomposition) continue;
        Int expected_tower = 0;
        if (r.id == "5" || r.id == "15") expected_tower = 2;
        if (r.id == "14") expected_tower = 5;
        Int found = 0;
        bool pure = true;
        for (const Term& term : *r.decomposition)
            for (const Scalar* s :
                 {&term.coeff, &term.form.a, &term.form.b, &term.form.c}) {
                if (s->tower() == 0) continue;
                if (found != 0 && found != s->tower()) pure = false;
                found = s->tower();
            }
        cross(pure && found == expected_tower,
              "row " + r.id + ": witness coefficients live in the wrong field");
    }

    if (!failures.empty()) throw_aggregated(failures);
    return summary;
}

// --- serialization ----------------------------------------------------------

namespace {

constexpr const char* kHeader = "cubicrank-catalog v1";

std::string term_str(const Term& t) {
    return to_string(t.coeff) + " | " + to_string(t.form.a) + ' ' +
           to_string(t.form.b) + ' ' + to_string(t.form.c);
}

std::string matrix_str(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i || j) out += ' ';
            out += to_string(m.at(i, j));
        }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

std::string serialize_catalog(const Catalog& catalog) {
    std::string out = std::string(kHeader) + "\nrecords " +
                      std::to_string(catalog.size()) + "\n";
    for (const OrbitRecord& r : catalog) {
        out += "\n[";
        out += r.is_real() ? "real " : "complex ";
        out += r.id + "]\n";
        out += "description " + r.description + "\n";
        out += "normal_form " + cubic_str(r.normal_form) + "\n";
        out += "rk_real " + (r.rk_real ? std::to_string(*r.rk_real) : "none") + "\n";
        out += "brk_real " + (r.brk_real ? std::to_string(*r.brk_real) : "none") + "\n";
        out += "rk_complex " + std::to_string(r.rk_complex) + "\n";
        out += "brk_complex " + std::to_string(r.brk_complex) + "\n";
        out += "hessian " + r.hessian_description + "\n";
        out += "hessian_check ";
        switch (r.hessian_check) {
        case HessianCheck::Zero: out += "zero"; break;
        case HessianCheck::PerfectCube: out += "cube"; break;
        case HessianCheck::ProportionalTo: out += cubic_str(r.hessian_expected); break;
        }
        out += "\ndecomposition ";
        if (!r.decomposition) {
            out += "none";
        } else {
            std::vector<std::string> parts;
            for (const Term& term : *r.decomposition) parts.push_back(term_str(term));
            out += join(parts, " ; ");
        }
        out += "\ndecomposition_form ";
        out += r.decomposition_form == r.normal_form
                   ? "same"
                   : cubic_str(r.decomposition_form);
        out += "\nto_normal_form ";
        out += r.to_normal_form ? matrix_str(*r.to_normal_form) : "none";
        out += "\ncorrespondence ";
        out += r.complex_correspondence.empty()
                   ? "none"
                   : join(r.complex_correspondence, ",");
        out += "\nnote " + (r.note.empty() ? "none" : r.note) + "\n";
    }
    return out;
}

namespace {

struct Cursor {
    std::vector<std::string> lines;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw CatalogParseError(i + 1, what);
    }
    bool done() const { return i >= lines.size(); }
    const std::string& peek() const {
        if (done()) throw CatalogParseError(lines.size() + 1, "unexpected end of file");
        return lines[i];
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(' ');
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(' ');
    return s.substr(a, b - a + 1);
}

// Reads the line "key value", enforcing order, and returns the value.
std::string field(Cursor& c, const std::string& key) {
    const std::string& line = c.peek();
    if (line.size() <= key.size() || line.compare(0, key.size(), key) != 0 ||
        line[key.size()] != ' ')
        c.fail("expected a '" + key + "' field");
    std::string value = line.substr(key.size() + 1);
    if (trim(value).empty()) c.fail("empty value for '" + key + "'");
    ++c.i;
    return value;
}

Scalar scalar_tok(const Cursor& c, const std::string& tok) {
    try {
        return scalar_from_string(tok);
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
}

std::vector<Scalar> scalar_list(const Cursor& c, const std::string& value,
                                std::size_t n) {
    std::vector<std::string> toks = split(value, ' ');
    if (toks.size() != n)
        c.fail("expected " + std::to_string(n) + " coefficients, got " +
               std::to_string(toks.size()));
    std::vector<Scalar> out;
    out.reserve(n);
    for (const std::string& t : toks) out.push_back(scalar_tok(c, t));
    return out;
}

TernaryCubic cubic_of(const Cursor& c, const std::string& value) {
    std::vector<Scalar> v = scalar_list(c, value, 10);
    std::array<Scalar, 10> a;
    std::move(v.begin(), v.end(), a.begin());
    return TernaryCubic(std::move(a));
}

int int_tok(const Cursor& c, const std::string& tok) {
    if (tok.empty() || tok.size() > 6) c.fail("bad integer '" + tok + "'");
    for (char ch : tok)
        if (ch < '0' || ch > '9') c.fail("bad integer '" + tok + "'");
    return std::stoi(tok);
}

OrbitRecord parse_record(Cursor& c) {
    const std::string& header = c.peek();
    if (header.size() < 4 || header.front() != '[' || header.back() != ']')
        c.fail("expected a record header like [real 1]");
    std::vector<std::string> parts =
        split(header.substr(1, header.size() - 2), ' ');
    if (parts.size() != 2 || (parts[0] != "real" && parts[0] != "complex"))
        c.fail("record header must be [real <id>] or [complex <id>]");
    const bool is_real_section = parts[0] == "real";
    ++c.i;

    OrbitRecord r;
    r.id = parts[1];
    r.description = field(c, "description");
    r.normal_form = cubic_of(c, field(c, "normal_form"));

    for (auto* slot : {&r.rk_real, &r.brk_real}) {
        std::string v = field(c, slot == &r.rk_real ? "rk_real" : "brk_real");
        if (v != "none") *slot = int_tok(c, v);
    }
    if (r.rk_real.has_value() != is_real_section ||
        r.brk_real.has_value() != is_real_section)
        c.fail("real rank fields disagree with the section kind");
    r.rk_complex = int_tok(c, field(c, "rk_complex"));
    r.brk_complex = int_tok(c, field(c, "brk_complex"));

    r.hessian_description = field(c, "hessian");
    std::string hc = field(c, "hessian_check");
    if (hc == "zero") {
        r.hessian_check = HessianCheck::Zero;
    } else if (hc == "cube") {
        r.hessian_check = HessianCheck::PerfectCube;
    } else {
        r.hessian_check = HessianCheck::ProportionalTo;
        r.hessian_expected = cubic_of(c, hc);
    }

    std::string dec = field(c, "decomposition");
    if (dec != "none") {
        std::vector<Term> terms;
        for (const std::string& piece : split(dec, ';')) {
            std::vector<std::string> halves = split(piece, '|');
            if (halves.size() != 2) c.fail("term needs one '|' separator");
            Term term;
            term.coeff = scalar_tok(c, trim(halves[0]));
            std::vector<Scalar> lv = scalar_list(c, trim(halves[1]), 3);
            term.form = {std::move(lv[0]), std::move(lv[1]), std::move(lv[2])};
            terms.push_back(std::move(term));
        }
        r.decomposition = std::move(terms);
    }

    std::string df = field(c, "decomposition_form");
    r.decomposition_form = df == "same" ? r.normal_form : cubic_of(c, df);

    std::string tnf = field(c, "to_normal_form");
    if (tnf != "none")
        r.to_normal_form = Matrix(3, 3, scalar_list(c, tnf, 9));

    std::string corr = field(c, "correspondence");
    if (corr != "none") {
        for (const std::string& id : split(corr, ',')) {
            if (trim(id).empty()) c.fail("empty id in correspondence list");
            r.complex_correspondence.push_back(trim(id));
        }
    }

    std::string note = field(c, "note");
    if (note != "none") r.note = note;
    return r;
}

} // namespace

Catalog parse_catalog(const std::string& text) {
    Cursor c;
    c.lines = split(text, '\n');
    if (!c.lines.empty() && c.lines.back().empty()) c.lines.pop_back();

    if (c.done() || c.peek() != kHeader)
        c.fail(std::string("expected header '") + kHeader + "'");
    ++c.i;
    const std::size_t declared = int_tok(c, field(c, "records"));

    Catalog cat;
    while (!c.done()) {
        if (c.lines[c.i].empty()) {
            ++c.i;
            continue;
        }
        cat.push_back(parse_record(c));
    }
    if (cat.size() != declared)
        c.fail("header declares " + std::to_string(declared) + " records, found " +
               std::to_string(cat.size()));
    return cat;
}

} // namespace cubicrank
