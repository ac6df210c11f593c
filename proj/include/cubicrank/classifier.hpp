#ifndef CUBICRANK_CLASSIFIER_HPP
#define CUBICRANK_CLASSIFIER_HPP

// End-to-end classification of real ternary cubics: orbit id within the
// sixteen-row catalog, real rank and border rank copied from the matched
// record, exact rank bounds, and a certified cube decomposition whenever
// one of the constructive routes succeeds.
//
// The decision tree mirrors the orbit geometry:
//   1. catalecticant rank <= 2: the form lives in two variables; a
//      kernel-complement change of basis reduces it to a binary cubic and
//      the binary classification picks among rows 1-4.
//   2. a linear factor exists over the tower: the cofactor conic and the
//      line/conic position (plus, for degenerate conics, whether the pair
//      vertex lies on the line) pick among rows 5-8, 12, 16.
//   3. otherwise the form is irreducible over the tower: a vanishing
//      invariant discriminant routes to the singular rows 13-15 via the
//      tangent cone at the double point, and smooth forms split into rows
//      9-11 by the signs of the fundamental invariants S and T.
//
// Every branch decision is recorded as (test, outcome) evidence.  The
// pipeline never guesses: when a needed algebraic object lies outside
// Q(sqrt d) -- the only case is a form whose linear factors live in a cubic
// field -- the report carries no orbit id and the evidence shows how far
// the decision got.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicrank/binaryrank.hpp"
#include "cubicrank/forms.hpp"

namespace cubicrank {

// Shape of an isolated double point, read off the quadratic part after
// moving the point to (0,0,1).
enum class TangentCone {
    Node,      // two distinct real tangent lines
    Cusp,      // one repeated tangent line
    Punctata,  // conjugate imaginary tangents: an isolated real point
};

// The unique singular point of an irreducible cubic, or nullopt when the
// curve is smooth.  Found exactly: pairwise resultants of the three
// partial derivatives (eliminating each variable in turn) produce binary
// forms whose rational roots, completed by back substitution, are the only
// candidates; each candidate is verified against all three partials.  The
// double point of an irreducible rational cubic is Galois-stable and hence
// rational, so rational root extraction is complete for rational input.
// Forms with a genuinely irrational singular locus (a triangle of lines
// conjugate over a cubic field) report nullopt.
std::optional<ProjectivePoint> singular_point(const TernaryCubic& f);

// Classifies the double point p of f by the discriminant of the quadratic
// part after a change of basis moving p to (0,0,1): positive means two
// real tangents, zero one repeated tangent, negative an isolated point.
// Throws std::invalid_argument when p is not a double point of f.
TangentCone tangent_cone_type(const TernaryCubic& f, const ProjectivePoint& p);

// A rank lower bound together with the test that produced it.
struct LowerBound {
    int value = 0;
    std::string source;
};

struct ClassificationOptions {
    // Search for a five-cube certificate on orbits of real rank five by
    // peeling one candidate cube from a small grid and running the
    // four-line construction on the remainder.  Best effort over a bounded
    // grid: the search may find nothing, and its outcome never affects the
    // orbit decision.
    bool search_rank5_certificate = false;
};

struct ClassificationReport {
    // Catalog row 1..16; nullopt when the decision could not be completed
    // inside the scalar tower.  The evidence then shows the partial state.
    std::optional<int> orbit_id;

    // Copied from the matched catalog record; nullopt iff orbit_id is.
    std::optional<int> rk_real;
    std::optional<int> brk_real;

    // Largest of the catalecticant rank and, when the orbit is known, the
    // complex rank of the matched record.
    LowerBound rank_lower_bound;

    // Best certified decomposition found; its length is the rank upper
    // bound.  Always present for nonzero input (the monomial rewrite
    // fallback never fails), and exact re-expansion to the input is
    // enforced by the Decomposition constructor.
    std::optional<Decomposition> certificate;

    // (test, outcome) pairs in decision order.
    std::vector<std::pair<std::string, std::string>> evidence;

    bool determined() const { return orbit_id.has_value(); }
    std::optional<int> rank_upper_bound() const {
        if (!certificate) return std::nullopt;
        return static_cast<int>(certificate->size());
    }
};

// Runs the full pipeline.  Throws ZeroForm on the zero cubic; never
// returns a wrong orbit id (see the header comment for the one
// undetermined case).
ClassificationReport classify(const TernaryCubic& f,
                              const ClassificationOptions& options = {});

struct RankBounds {
    LowerBound lower;
    // The upper bound is the certificate length; nullopt only if every
    // constructive route failed, which the rewrite fallback prevents.
    std::optional<Decomposition> certificate;

    std::optional<int> upper() const {
        if (!certificate) return std::nullopt;
        return static_cast<int>(certificate->size());
    }
};

// Rank bounds on their own, for callers that do not need the orbit.
// Throws ZeroForm on the zero cubic.
RankBounds rank_bounds(const TernaryCubic& f,
                       const ClassificationOptions& options = {});

// A valid (generally non-minimal) decomposition built from per-monomial
// identities: each a^2 b monomial is rewritten through
//   a^2 b = 1/6 ((b+a)^3 + (b-a)^3 - 2 b^3),
// the xyz monomial through
//   xyz = 1/24 ((x+y+z)^3 - (x+y-z)^3 - (x-y+z)^3 + (x-y-z)^3),
// cube monomials are kept as they are, and proportional lines are merged.
// Accepts any input, including zero (the empty decomposition).
Decomposition identity_rewrite_upper_bound(const TernaryCubic& f);

} // namespace cubicrank

#endif
