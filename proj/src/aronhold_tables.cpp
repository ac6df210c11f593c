// Generated by scripts/derive_invariants.py; do not edit by hand.
// Integer term tables of the degree-4 and degree-6 coefficient
// invariants of a ternary cubic, over one common denominator each.

#include "cubicrank/aronhold_tables.hpp"

namespace cubicrank {

const long long kSDenominator = 1296;
const InvariantTerm kSTerms[] = {
    {-144LL, {1, 0, 0, 1, 0, 0, 0, 1, 0, 1}},
    {48LL, {1, 0, 0, 1, 0, 0, 0, 0, 2, 0}},
    {216LL, {1, 0, 0, 0, 1, 0, 1, 0, 0, 1}},
    {-24LL, {1, 0, 0, 0, 1, 0, 0, 1, 1, 0}},
    {-144LL, {1, 0, 0, 0, 0, 1, 1, 0, 1, 0}},
    {48LL, {1, 0, 0, 0, 0, 1, 0, 2, 0, 0}},
    {48LL, {0, 2, 0, 0, 0, 0, 0, 1, 0, 1}},
    {-16LL, {0, 2, 0, 0, 0, 0, 0, 0, 2, 0}},
    {-144LL, {0, 1, 1, 0, 0, 0, 1, 0, 0, 1}},
    {16LL, {0, 1, 1, 0, 0, 0, 0, 1, 1, 0}},
    {-24LL, {0, 1, 0, 1, 1, 0, 0, 0, 0, 1}},
    {16LL, {0, 1, 0, 1, 0, 1, 0, 0, 1, 0}},
    {8LL, {0, 1, 0, 0, 2, 0, 0, 0, 1, 0}},
    {-24LL, {0, 1, 0, 0, 1, 1, 0, 1, 0, 0}},
    {48LL, {0, 1, 0, 0, 0, 2, 1, 0, 0, 0}},
    {48LL, {0, 0, 2, 0, 0, 0, 1, 0, 1, 0}},
    {-16LL, {0, 0, 2, 0, 0, 0, 0, 2, 0, 0}},
    {48LL, {0, 0, 1, 2, 0, 0, 0, 0, 0, 1}},
    {-24LL, {0, 0, 1, 1, 1, 0, 0, 0, 1, 0}},
    {16LL, {0, 0, 1, 1, 0, 1, 0, 1, 0, 0}},
    {8LL, {0, 0, 1, 0, 2, 0, 0, 1, 0, 0}},
    {-24LL, {0, 0, 1, 0, 1, 1, 1, 0, 0, 0}},
    {-16LL, {0, 0, 0, 2, 0, 2, 0, 0, 0, 0}},
    {8LL, {0, 0, 0, 1, 2, 1, 0, 0, 0, 0}},
    {-1LL, {0, 0, 0, 0, 4, 0, 0, 0, 0, 0}},
};
const std::size_t kSCount = sizeof(kSTerms) / sizeof(kSTerms[0]);

const long long kTDenominator = 5832;
const InvariantTerm kTTerms[] = {
    {5832LL, {2, 0, 0, 0, 0, 0, 2, 0, 0, 2}},
    {-3888LL, {2, 0, 0, 0, 0, 0, 1, 1, 1, 1}},
    {864LL, {2, 0, 0, 0, 0, 0, 1, 0, 3, 0}},
    {864LL, {2, 0, 0, 0, 0, 0, 0, 3, 0, 1}},
    {-216LL, {2, 0, 0, 0, 0, 0, 0, 2, 2, 0}},
    {-3888LL, {1, 1, 0, 1, 0, 0, 1, 0, 0, 2}},
    {1296LL, {1, 1, 0, 1, 0, 0, 0, 1, 1, 1}},
    {-288LL, {1, 1, 0, 1, 0, 0, 0, 0, 3, 0}},
    {1296LL, {1, 1, 0, 0, 1, 0, 1, 0, 1, 1}},
    {-864LL, {1, 1, 0, 0, 1, 0, 0, 2, 0, 1}},
    {144LL, {1, 1, 0, 0, 1, 0, 0, 1, 2, 0}},
    {1296LL, {1, 1, 0, 0, 0, 1, 1, 1, 0, 1}},
    {-864LL, {1, 1, 0, 0, 0, 1, 1, 0, 2, 0}},
    {144LL, {1, 1, 0, 0, 0, 1, 0, 2, 1, 0}},
    {1296LL, {1, 0, 1, 1, 0, 0, 1, 0, 1, 1}},
    {-864LL, {1, 0, 1, 1, 0, 0, 0, 2, 0, 1}},
    {144LL, {1, 0, 1, 1, 0, 0, 0, 1, 2, 0}},
    {1296LL, {1, 0, 1, 0, 1, 0, 1, 1, 0, 1}},
    {-864LL, {1, 0, 1, 0, 1, 0, 1, 0, 2, 0}},
    {144LL, {1, 0, 1, 0, 1, 0, 0, 2, 1, 0}},
    {-3888LL, {1, 0, 1, 0, 0, 1, 2, 0, 0, 1}},
    {1296LL, {1, 0, 1, 0, 0, 1, 1, 1, 1, 0}},
    {-288LL, {1, 0, 1, 0, 0, 1, 0, 3, 0, 0}},
    {864LL, {1, 0, 0, 3, 0, 0, 0, 0, 0, 2}},
    {-864LL, {1, 0, 0, 2, 1, 0, 0, 0, 1, 1}},
    {-864LL, {1, 0, 0, 2, 0, 1, 0, 1, 0, 1}},
    {576LL, {1, 0, 0, 2, 0, 1, 0, 0, 2, 0}},
    {648LL, {1, 0, 0, 1, 2, 0, 0, 1, 0, 1}},
    {72LL, {1, 0, 0, 1, 2, 0, 0, 0, 2, 0}},
    {1296LL, {1, 0, 0, 1, 1, 1, 1, 0, 0, 1}},
    {-720LL, {1, 0, 0, 1, 1, 1, 0, 1, 1, 0}},
    {-864LL, {1, 0, 0, 1, 0, 2, 1, 0, 1, 0}},
    {576LL, {1, 0, 0, 1, 0, 2, 0, 2, 0, 0}},
    {-540LL, {1, 0, 0, 0, 3, 0, 1, 0, 0, 1}},
    {-36LL, {1, 0, 0, 0, 3, 0, 0, 1, 1, 0}},
    {648LL, {1, 0, 0, 0, 2, 1, 1, 0, 1, 0}},
    {72LL, {1, 0, 0, 0, 2, 1, 0, 2, 0, 0}},
    {-864LL, {1, 0, 0, 0, 1, 2, 1, 1, 0, 0}},
    {864LL, {1, 0, 0, 0, 0, 3, 2, 0, 0, 0}},
    {864LL, {0, 3, 0, 0, 0, 0, 1, 0, 0, 2}},
    {-288LL, {0, 3, 0, 0, 0, 0, 0, 1, 1, 1}},
    {64LL, {0, 3, 0, 0, 0, 0, 0, 0, 3, 0}},
    {-864LL, {0, 2, 1, 0, 0, 0, 1, 0, 1, 1}},
    {576LL, {0, 2, 1, 0, 0, 0, 0, 2, 0, 1}},
    {-96LL, {0, 2, 1, 0, 0, 0, 0, 1, 2, 0}},
    {-216LL, {0, 2, 0, 2, 0, 0, 0, 0, 0, 2}},
    {144LL, {0, 2, 0, 1, 1, 0, 0, 0, 1, 1}},
    {144LL, {0, 2, 0, 1, 0, 1, 0, 1, 0, 1}},
    {-96LL, {0, 2, 0, 1, 0, 1, 0, 0, 2, 0}},
    {72LL, {0, 2, 0, 0, 2, 0, 0, 1, 0, 1}},
    {-48LL, {0, 2, 0, 0, 2, 0, 0, 0, 2, 0}},
    {-864LL, {0, 2, 0, 0, 1, 1, 1, 0, 0, 1}},
    {144LL, {0, 2, 0, 0, 1, 1, 0, 1, 1, 0}},
    {576LL, {0, 2, 0, 0, 0, 2, 1, 0, 1, 0}},
    {-216LL, {0, 2, 0, 0, 0, 2, 0, 2, 0, 0}},
    {-864LL, {0, 1, 2, 0, 0, 0, 1, 1, 0, 1}},
    {576LL, {0, 1, 2, 0, 0, 0, 1, 0, 2, 0}},
    {-96LL, {0, 1, 2, 0, 0, 0, 0, 2, 1, 0}},
    {144LL, {0, 1, 1, 2, 0, 0, 0, 0, 1, 1}},
    {-720LL, {0, 1, 1, 1, 1, 0, 0, 1, 0, 1}},
    {144LL, {0, 1, 1, 1, 1, 0, 0, 0, 2, 0}},
    {1296LL, {0, 1, 1, 1, 0, 1, 1, 0, 0, 1}},
    {-48LL, {0, 1, 1, 1, 0, 1, 0, 1, 1, 0}},
    {648LL, {0, 1, 1, 0, 2, 0, 1, 0, 0, 1}},
    {-24LL, {0, 1, 1, 0, 2, 0, 0, 1, 1, 0}},
    {-720LL, {0, 1, 1, 0, 1, 1, 1, 0, 1, 0}},
    {144LL, {0, 1, 1, 0, 1, 1, 0, 2, 0, 0}},
    {144LL, {0, 1, 1, 0, 0, 2, 1, 1, 0, 0}},
    {144LL, {0, 1, 0, 2, 1, 1, 0, 0, 0, 1}},
    {-96LL, {0, 1, 0, 2, 0, 2, 0, 0, 1, 0}},
    {-36LL, {0, 1, 0, 1, 3, 0, 0, 0, 0, 1}},
    {-24LL, {0, 1, 0, 1, 2, 1, 0, 0, 1, 0}},
    {144LL, {0, 1, 0, 1, 1, 2, 0, 1, 0, 0}},
    {-288LL, {0, 1, 0, 1, 0, 3, 1, 0, 0, 0}},
    {12LL, {0, 1, 0, 0, 4, 0, 0, 0, 1, 0}},
    {-36LL, {0, 1, 0, 0, 3, 1, 0, 1, 0, 0}},
    {72LL, {0, 1, 0, 0, 2, 2, 1, 0, 0, 0}},
    {864LL, {0, 0, 3, 0, 0, 0, 2, 0, 0, 1}},
    {-288LL, {0, 0, 3, 0, 0, 0, 1, 1, 1, 0}},
    {64LL, {0, 0, 3, 0, 0, 0, 0, 3, 0, 0}},
    {576LL, {0, 0, 2, 2, 0, 0, 0, 1, 0, 1}},
    {-216LL, {0, 0, 2, 2, 0, 0, 0, 0, 2, 0}},
    {-864LL, {0, 0, 2, 1, 1, 0, 1, 0, 0, 1}},
    {144LL, {0, 0, 2, 1, 1, 0, 0, 1, 1, 0}},
    {144LL, {0, 0, 2, 1, 0, 1, 1, 0, 1, 0}},
    {-96LL, {0, 0, 2, 1, 0, 1, 0, 2, 0, 0}},
    {72LL, {0, 0, 2, 0, 2, 0, 1, 0, 1, 0}},
    {-48LL, {0, 0, 2, 0, 2, 0, 0, 2, 0, 0}},
    {144LL, {0, 0, 2, 0, 1, 1, 1, 1, 0, 0}},
    {-216LL, {0, 0, 2, 0, 0, 2, 2, 0, 0, 0}},
    {-288LL, {0, 0, 1, 3, 0, 1, 0, 0, 0, 1}},
    {72LL, {0, 0, 1, 2, 2, 0, 0, 0, 0, 1}},
    {144LL, {0, 0, 1, 2, 1, 1, 0, 0, 1, 0}},
    {-96LL, {0, 0, 1, 2, 0, 2, 0, 1, 0, 0}},
    {-36LL, {0, 0, 1, 1, 3, 0, 0, 0, 1, 0}},
    {-24LL, {0, 0, 1, 1, 2, 1, 0, 1, 0, 0}},
    {144LL, {0, 0, 1, 1, 1, 2, 1, 0, 0, 0}},
    {12LL, {0, 0, 1, 0, 4, 0, 0, 1, 0, 0}},
    {-36LL, {0, 0, 1, 0, 3, 1, 1, 0, 0, 0}},
    {64LL, {0, 0, 0, 3, 0, 3, 0, 0, 0, 0}},
    {-48LL, {0, 0, 0, 2, 2, 2, 0, 0, 0, 0}},
    {12LL, {0, 0, 0, 1, 4, 1, 0, 0, 0, 0}},
    {-1LL, {0, 0, 0, 0, 6, 0, 0, 0, 0, 0}},
};
const std::size_t kTCount = sizeof(kTTerms) / sizeof(kTTerms[0]);

} // namespace cubicrank
