#ifndef CUBICRANK_ARONHOLD_TABLES_HPP
#define CUBICRANK_ARONHOLD_TABLES_HPP

// Integer term tables for the two fundamental coefficient invariants of a
// ternary cubic: S (degree 4 in the coefficients) and T (degree 6).  Each
// invariant is sum(coeff * prod(a_i^exps[i])) / denominator over its table,
// with a_i the cubic's coefficients in the fixed monomial order.  The
// tables are generated by scripts/derive_invariants.py.

#include <cstddef>

namespace cubicrank {

struct InvariantTerm {
    long long coeff;
    unsigned char exps[10];
};

extern const long long kSDenominator;
extern const InvariantTerm kSTerms[];
extern const std::size_t kSCount;

extern const long long kTDenominator;
extern const InvariantTerm kTTerms[];
extern const std::size_t kTCount;

} // namespace cubicrank

#endif
