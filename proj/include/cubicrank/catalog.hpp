#ifndef CUBICRANK_CATALOG_HPP
#define CUBICRANK_CATALOG_HPP

// Built-in table of orbit representatives for ternary cubics under real and
// complex linear changes of variables: normal forms, Waring ranks and border
// ranks over both fields, the shape of each Hessian, and explicit cube
// decompositions witnessing the real ranks.  Nothing here is trusted as
// stored: verify_entry re-derives every checkable claim from scratch and
// verify_all adds the cross-record consistency conditions.

#include "cubicrank/forms.hpp"
#include "cubicrank/matrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicrank {

// How hessian(normal_form) is checked.
enum class HessianCheck {
    Zero,            // vanishes identically
    ProportionalTo,  // nonzero scalar multiple of hessian_expected
    PerfectCube,     // cube of a single linear form (expected form not pinned)
};

struct OrbitRecord {
    std::string id;          // "1".."16" over R, "C1".."C10" over C
    std::string description; // geometric name of the orbit

    TernaryCubic normal_form;

    // Ranks over R are absent on the complex rows.
    std::optional<int> rk_real;
    std::optional<int> brk_real;
    int rk_complex = 0;
    int brk_complex = 0;

    std::string hessian_description;
    HessianCheck hessian_check = HessianCheck::Zero;
    TernaryCubic hessian_expected; // meaningful only for ProportionalTo

    // Witness for rk_real: sum of coeff * form^3 equal to decomposition_form,
    // which is the normal form itself or an orbit-equivalent representative.
    // When the two differ and a rational change of basis exists, to_normal_form
    // carries decomposition_form onto normal_form up to a scalar; when the
    // change of basis needs an irrationality the matrix is absent and the note
    // says why.  A missing witness (rank value recorded without an explicit
    // sum of cubes) is also legal.
    std::optional<std::vector<Term>> decomposition;
    TernaryCubic decomposition_form;
    std::optional<Matrix> to_normal_form;

    // For complex rows: the real ids whose complexifications land in this
    // orbit.  Real rows leave it empty.
    std::vector<std::string> complex_correspondence;

    // Free-text annotation: repairs, relaxations, deliberately absent data.
    std::string note;

    bool is_real() const { return rk_real.has_value(); }
};

using Catalog = std::vector<OrbitRecord>;

// The 16 real records followed by the 10 complex ones.
Catalog builtin_catalog();

// Record lookup by id; throws std::out_of_range on unknown ids.
const OrbitRecord& record_by_id(const Catalog& catalog, const std::string& id);

// Raised by verify_entry / verify_all; the message names the record, the
// failing condition, and both sides of the mismatched comparison.
class VerificationFailed : public std::runtime_error {
public:
    explicit VerificationFailed(const std::string& what);
};

// Which checks actually ran on a record (each ran and passed; any failure
// throws instead).  Rows without a stored witness skip the witness checks,
// rows without a stored matrix skip the transport check.
struct VerificationReport {
    std::string id;
    bool expansion_checked = false;  // witness re-expands to decomposition_form
    bool transport_checked = false;  // substitution carries it to normal_form
    bool hessian_checked = false;    // hessian shape matches the record
    bool length_checked = false;     // witness length equals rk_real
    std::size_t terms = 0;           // witness length, 0 when none stored
    std::string note;                // copied from the record
};

VerificationReport verify_entry(const OrbitRecord& record);

struct CatalogSummary {
    std::size_t real_records = 0;
    std::size_t complex_records = 0;
    std::size_t witnesses_checked = 0;
    std::size_t cross_checks = 0;
    std::vector<VerificationReport> reports;
};

// verify_entry on every record plus the cross-record conditions: ids complete
// and unique, rank inequalities between the fields, the recorded rank versus
// border-rank gaps, correspondence lists forming a partition of the real ids
// with matching complex ranks, and the coefficient field of each witness.
// All failures are aggregated into a single VerificationFailed.
CatalogSummary verify_all(const Catalog& catalog);

// Versioned plain-text serialization.  parse_catalog accepts exactly the
// serializer's output grammar and throws CatalogParseError (with a line
// number) on anything else; it restores records field-for-field, so
// serialize(parse(text)) == text.
class CatalogParseError : public std::runtime_error {
public:
    CatalogParseError(std::size_t line, const std::string& what);
};

std::string serialize_catalog(const Catalog& catalog);
Catalog parse_catalog(const std::string& text);

} // namespace cubicrank

#endif
