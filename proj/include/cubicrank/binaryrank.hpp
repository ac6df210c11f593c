#ifndef CUBICRANK_BINARYRANK_HPP
#define CUBICRANK_BINARYRANK_HPP

// Real Waring rank of binary cubics, decided exactly by the sign of the
// discriminant and the rank of the 2x3 moment matrix, together with
// constructive decompositions into cubes of real linear forms.
//
// Rank table: a perfect cube has rank 1; discriminant > 0 (one real root)
// gives rank 2; discriminant < 0 (three distinct real roots) gives rank 3;
// discriminant = 0 with a double root gives rank 3 as well, sitting on the
// tangent surface of the rank-1 locus.

#include <stdexcept>

#include "cubicrank/forms.hpp"
#include "cubicrank/matrix.hpp"

namespace cubicrank {

class ZeroForm : public std::runtime_error {
public:
    ZeroForm() : std::runtime_error("the zero form has no rank") {}
};

// A decomposition step needed a root that generates a cubic field, which
// exact arithmetic over one square-root extension cannot represent.  The
// rank itself is still decided and carried here.
class UnsupportedAlgebraicDegree : public std::runtime_error {
public:
    explicit UnsupportedAlgebraicDegree(int rank)
        : std::runtime_error(
              "decomposition requires a root of algebraic degree 3"),
          rank_(rank) {}

    int rank() const { return rank_; }

private:
    int rank_;
};

enum class BinaryOrbit {
    PerfectCube,      // rank 1: the form is a scaled cube
    GenericPositive,  // rank 2: positive discriminant, one real root
    GenericNegative,  // rank 3: negative discriminant, three real roots
    TangentSurface,   // rank 3: zero discriminant, a double root
};

struct BinaryClassification {
    int rank;                        // 1, 2, or 3
    std::size_t catalecticant_rank;  // 1 or 2
    Scalar discriminant;
    BinaryOrbit orbit;
};

// (AD-BC)^2 - 4(BD-C^2)(AC-B^2) in the classical A,3B,3C,D coefficient view.
// Positive for one real root, negative for three distinct real roots, zero
// for a repeated root.
Scalar binary_discriminant(const BinaryCubic& f);

// The 2x3 moment matrix with rows (A,B,C) and (B,C,D); its rank is 1
// exactly on perfect cubes.
Matrix binary_catalecticant(const BinaryCubic& f);

// Rank, orbit, and the data both were decided from.  Throws ZeroForm.
BinaryClassification binary_real_rank(const BinaryCubic& f);

// A certified decomposition of length binary_real_rank(f).rank.
//
// Rank 1 extracts the cube.  Rank 2 takes the two real roots of the apolar
// quadratic (the moment-matrix kernel), extending Q by one square root when
// needed.  Rank 3 splits off a real root line l of f: the double-root case
// factors f = m^2 n and rewrites via
//   m^2 n = 1/6 (n+m)^3 + 1/6 (n-m)^3 - 1/3 n^3,
// while the three-roots case writes f = l (d l^2 + g w^2) in a basis that
// kills the cross term and rewrites l w^2 the same way.  Among several real
// root lines the one with the smallest root (by absolute value, preferring
// the nonnegative one on ties, u/v = infinity last) is split off.
//
// Throws ZeroForm, and UnsupportedAlgebraicDegree when f is an irreducible
// cubic with three real roots (they all have algebraic degree 3).
BinaryDecomposition binary_decompose(const BinaryCubic& f);

} // namespace cubicrank

#endif
