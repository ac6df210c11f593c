// Command line driver: parse a form, run the library, report exactly.
// Every number printed is an exact rational or quadratic-tower string;
// nothing is ever rounded to a float.
//
// Exit codes: 0 on success, 1 when a result is undetermined or a
// verification fails, 2 on usage or parse errors.

#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicrank/binaryrank.hpp"
#include "cubicrank/catalog.hpp"
#include "cubicrank/classifier.hpp"
#include "cubicrank/covariants.hpp"
#include "cubicrank/depaolis.hpp"
#include "cubicrank/textio.hpp"

using nlohmann::json;
using namespace cubicrank;

namespace {

constexpr int kOk = 0;
constexpr int kNoAnswer = 1;
constexpr int kBadInput = 2;

const Catalog& orbit_catalog() {
    static const Catalog c = builtin_catalog();
    return c;
}

// Every report carries the same keys; absent values stay null or empty.
json skeleton(const std::string& input) {
    json j;
    j["input"] = input;
    j["orbit"] = nullptr;
    j["description"] = nullptr;
    j["rk_real"] = nullptr;
    j["brk_real"] = nullptr;
    j["rk_complex"] = nullptr;
    j["brk_complex"] = nullptr;
    j["decomposition"] = json::array();
    j["evidence"] = json::array();
    j["errors"] = json::array();
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int report_error(json& j, bool as_json, const char* code,
                 const std::string& message, int rc) {
    if (as_json) {
        j["errors"].push_back({{"code", code}, {"message", message}});
        emit(j);
    } else {
        std::cerr << "error (" << code << "): " << message << "\n";
    }
    return rc;
}

std::string coeff_text(const Scalar& c) {
    std::string s = to_string(c);
    return c.is_rational() ? s : "(" + s + ")";
}

std::string term_line(const Term& t) {
    return coeff_text(t.coeff) + " * (" + to_string(t.form) + ")^3";
}

// "a,b,c" with exact rational entries.
std::array<Scalar, 3> parse_triple(const std::string& csv) {
    std::array<Scalar, 3> out;
    std::stringstream ss(csv);
    std::string item;
    std::size_t k = 0;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos || k == 3)
            throw ScalarFormatError(csv);
        out[k++] = Scalar(rational_from_string(item.substr(a, b - a + 1)));
    }
    if (k != 3) throw ScalarFormatError(csv);
    return out;
}

const char* orbit_name(BinaryOrbit o) {
    switch (o) {
        case BinaryOrbit::PerfectCube: return "perfect cube";
        case BinaryOrbit::GenericPositive: return "one real root";
        case BinaryOrbit::GenericNegative: return "three real roots";
        case BinaryOrbit::TangentSurface: return "repeated root";
    }
    return "?";
}

int run_classify(const std::string& text, bool as_json) {
    json j = skeleton(text);
    try {
        TernaryCubic f = parse_cubic(text);
        ClassificationReport rep = classify(f);

        const OrbitRecord* rec = nullptr;
        if (rep.orbit_id) {
            rec = &record_by_id(orbit_catalog(), std::to_string(*rep.orbit_id));
            j["orbit"] = *rep.orbit_id;
            j["description"] = rec->description;
            j["rk_complex"] = rec->rk_complex;
            j["brk_complex"] = rec->brk_complex;
        }
        if (rep.rk_real) j["rk_real"] = *rep.rk_real;
        if (rep.brk_real) j["brk_real"] = *rep.brk_real;
        for (const auto& [test, outcome] : rep.evidence)
            j["evidence"].push_back({{"test", test}, {"outcome", outcome}});
        j["evidence"].push_back(
            {{"test", "rank lower bound"},
             {"outcome", std::to_string(rep.rank_lower_bound.value) + " (" +
                             rep.rank_lower_bound.source + ")"}});
        if (rep.certificate)
            for (const Term& t : rep.certificate->terms())
                j["decomposition"].push_back({{"coeff", to_string(t.coeff)},
                                              {"form", to_string(t.form)}});

        if (as_json) {
            emit(j);
        } else {
            if (rec) {
                std::cout << "orbit: " << *rep.orbit_id << " (" << rec->description
                          << ")\n"
                          << "real rank: " << *rep.rk_real
                          << ", real border rank: " << *rep.brk_real << "\n"
                          << "complex rank: " << rec->rk_complex
                          << ", complex border rank: " << rec->brk_complex
                          << "\n";
            } else {
                std::cout << "orbit: undetermined (outside quadratic towers)\n";
            }
            std::cout << "rank lower bound: " << rep.rank_lower_bound.value
                      << " (" << rep.rank_lower_bound.source << ")\n";
            if (rep.certificate) {
                std::cout << "certificate (" << rep.certificate->size()
                          << " cubes):\n";
                for (const Term& t : rep.certificate->terms())
                    std::cout << "  " << term_line(t) << "\n";
            }
            std::cout << "evidence:\n";
            for (const auto& [test, outcome] : rep.evidence)
                std::cout << "  " << test << ": " << outcome << "\n";
        }
        return rep.determined() ? kOk : kNoAnswer;
    } catch (const SyntaxError& e) {
        return report_error(j, as_json, "syntax", e.what(), kBadInput);
    } catch (const NotHomogeneousDegree3& e) {
        return report_error(j, as_json, "not-homogeneous-cubic", e.what(),
                            kBadInput);
    } catch (const UnsupportedRadical& e) {
        return report_error(j, as_json, "unsupported-radical", e.what(),
                            kBadInput);
    } catch (const ZeroForm& e) {
        return report_error(j, as_json, "zero-form", e.what(), kBadInput);
    }
}

int run_decompose(const std::string& text, bool as_json) {
    json j = skeleton(text);
    try {
        TernaryCubic f = parse_cubic(text);
        RankBounds rb = rank_bounds(f);
        j["evidence"].push_back(
            {{"test", "rank lower bound"},
             {"outcome", std::to_string(rb.lower.value) + " (" +
                             rb.lower.source + ")"}});
        if (rb.certificate)
            for (const Term& t : rb.certificate->terms())
                j["decomposition"].push_back({{"coeff", to_string(t.coeff)},
                                              {"form", to_string(t.form)}});
        if (as_json) {
            emit(j);
        } else {
            std::cout << "rank lower bound: " << rb.lower.value << " ("
                      << rb.lower.source << ")\n";
            if (rb.upper())
                std::cout << "rank upper bound: " << *rb.upper() << "\n";
            if (rb.certificate) {
                std::cout << "certificate:\n";
                for (const Term& t : rb.certificate->terms())
                    std::cout << "  " << term_line(t) << "\n";
            }
        }
        return kOk;
    } catch (const SyntaxError& e) {
        return report_error(j, as_json, "syntax", e.what(), kBadInput);
    } catch (const NotHomogeneousDegree3& e) {
        return report_error(j, as_json, "not-homogeneous-cubic", e.what(),
                            kBadInput);
    } catch (const UnsupportedRadical& e) {
        return report_error(j, as_json, "unsupported-radical", e.what(),
                            kBadInput);
    } catch (const ZeroForm& e) {
        return report_error(j, as_json, "zero-form", e.what(), kBadInput);
    }
}

int run_hessian(const std::string& text) {
    json j = skeleton(text);
    try {
        std::cout << to_string(hessian(parse_cubic(text))) << "\n";
        return kOk;
    } catch (const SyntaxError& e) {
        return report_error(j, false, "syntax", e.what(), kBadInput);
    } catch (const NotHomogeneousDegree3& e) {
        return report_error(j, false, "not-homogeneous-cubic", e.what(),
                            kBadInput);
    } catch (const UnsupportedRadical& e) {
        return report_error(j, false, "unsupported-radical", e.what(),
                            kBadInput);
    }
}

int run_polar(const std::string& text, const std::string& point_csv) {
    json j = skeleton(text);
    try {
        TernaryCubic f = parse_cubic(text);
        std::array<Scalar, 3> p = parse_triple(point_csv);
        ProjectivePoint y(p[0], p[1], p[2]);
        std::cout << to_string(polar_conic(f, y).quadratic()) << "\n";
        return kOk;
    } catch (const SyntaxError& e) {
        return report_error(j, false, "syntax", e.what(), kBadInput);
    } catch (const NotHomogeneousDegree3& e) {
        return report_error(j, false, "not-homogeneous-cubic", e.what(),
                            kBadInput);
    } catch (const UnsupportedRadical& e) {
        return report_error(j, false, "unsupported-radical", e.what(),
                            kBadInput);
    } catch (const ScalarFormatError& e) {
        return report_error(j, false, "point-format", e.what(), kBadInput);
    } catch (const std::invalid_argument& e) {
        return report_error(j, false, "point-format", e.what(), kBadInput);
    }
}

int run_depaolis(const std::string& text, const std::string& line_csv) {
    json j = skeleton(text);
    try {
        TernaryCubic f = parse_cubic(text);
        std::array<Scalar, 3> c = parse_triple(line_csv);
        LinearForm l0{c[0], c[1], c[2]};
        DePaolisResult r = depaolis(f, l0);
        std::cout << "four-line certificate through " << to_string(l0)
                  << ":\n";
        for (const Term& t : r.decomposition.terms())
            std::cout << "  " << term_line(t) << "\n";
        return kOk;
    } catch (const SyntaxError& e) {
        return report_error(j, false, "syntax", e.what(), kBadInput);
    } catch (const NotHomogeneousDegree3& e) {
        return report_error(j, false, "not-homogeneous-cubic", e.what(),
                            kBadInput);
    } catch (const UnsupportedRadical& e) {
        return report_error(j, false, "unsupported-radical", e.what(),
                            kBadInput);
    } catch (const ScalarFormatError& e) {
        return report_error(j, false, "line-format", e.what(), kBadInput);
    } catch (const std::invalid_argument& e) {
        return report_error(j, false, "line-format", e.what(), kBadInput);
    } catch (const ZeroForm& e) {
        return report_error(j, false, "zero-form", e.what(), kBadInput);
    } catch (const IndistinctIntersection& e) {
        return report_error(j, false, "indistinct-intersection", e.what(),
                            kNoAnswer);
    } catch (const ConeDetected& e) {
        return report_error(j, false, "cone", e.what(), kNoAnswer);
    } catch (const InconsistentSystem& e) {
        return report_error(j, false, "inconsistent-system", e.what(),
                            kNoAnswer);
    }
}

int run_binary(const std::string& text) {
    json j = skeleton(text);
    try {
        BinaryCubic b = parse_binary_cubic(text);
        BinaryClassification c = binary_real_rank(b);
        std::cout << "real rank: " << c.rank << "\n"
                  << "catalecticant rank: " << c.catalecticant_rank << "\n"
                  << "discriminant: " << to_string(c.discriminant) << "\n"
                  << "orbit: " << orbit_name(c.orbit) << "\n";
        try {
            BinaryDecomposition d = binary_decompose(b);
            std::cout << "certificate (" << d.size() << " cubes):\n";
            for (const BinaryTerm& t : d.terms()) {
                LinearForm l{t.form.u, t.form.v, Scalar(0)};
                std::cout << "  " << coeff_text(t.coeff) << " * ("
                          << to_string(l) << ")^3\n";
            }
        } catch (const UnsupportedAlgebraicDegree& e) {
            std::cout << "certificate: none within one square root ("
                      << e.what() << ")\n";
        }
        return kOk;
    } catch (const SyntaxError& e) {
        return report_error(j, false, "syntax", e.what(), kBadInput);
    } catch (const NotHomogeneousDegree3& e) {
        return report_error(j, false, "not-homogeneous-cubic", e.what(),
                            kBadInput);
    } catch (const UnsupportedRadical& e) {
        return report_error(j, false, "unsupported-radical", e.what(),
                            kBadInput);
    } catch (const ZeroForm& e) {
        return report_error(j, false, "zero-form", e.what(), kBadInput);
    }
}

int run_verify_catalog(const std::string& path) {
    json j = skeleton(path.empty() ? "builtin catalog" : path);
    try {
        Catalog cat;
        if (path.empty()) {
            // The text layer stays in the loop even without a file: verify
            // a freshly reparsed serialization of the builtin data.
            cat = parse_catalog(serialize_catalog(builtin_catalog()));
        } else {
            std::ifstream in(path);
            if (!in)
                return report_error(j, false, "io", "cannot read " + path,
                                    kBadInput);
            std::stringstream ss;
            ss << in.rdbuf();
            cat = parse_catalog(ss.str());
        }
        CatalogSummary s = verify_all(cat);
        for (const VerificationReport& r : s.reports) {
            const OrbitRecord& rec = record_by_id(cat, r.id);
            if (!rec.is_real()) continue;
            std::cout << "PASS row " << r.id << ": " << rec.description;
            if (!r.note.empty()) std::cout << "  [" << r.note << "]";
            std::cout << "\n";
        }
        std::cout << s.real_records << " real and " << s.complex_records
                  << " complex records verified (" << s.witnesses_checked
                  << " witnesses, " << s.cross_checks << " cross checks)\n";
        return kOk;
    } catch (const CatalogParseError& e) {
        return report_error(j, false, "catalog-parse", e.what(), kBadInput);
    } catch (const VerificationFailed& e) {
        return report_error(j, false, "verification-failed", e.what(),
                            kNoAnswer);
    }
}

int run_sample(long count, unsigned long seed, long bound) {
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::map<int, long> tally;  // 0 counts undetermined forms
    long zero_forms = 0;
    for (long n = 0; n < count; ++n) {
        std::array<Scalar, 10> c;
        for (std::size_t k = 0; k < 10; ++k) c[k] = Scalar(coef(rng));
        TernaryCubic f(std::move(c));
        if (f.is_zero()) {
            ++zero_forms;
            continue;
        }
        ClassificationReport rep = classify(f);
        ++tally[rep.orbit_id ? *rep.orbit_id : 0];
    }
    std::cout << "sampled " << count << " forms, coefficients in [-" << bound
              << ", " << bound << "], seed " << seed << "\n";
    for (const auto& [row, hits] : tally) {
        if (row == 0) continue;
        const OrbitRecord& rec =
            record_by_id(orbit_catalog(), std::to_string(row));
        std::cout << "  row " << row << "  " << hits << "  ("
                  << rec.description << ")\n";
    }
    std::cout << "  undetermined  " << (tally.count(0) ? tally[0] : 0) << "\n";
    if (zero_forms) std::cout << "  zero forms skipped  " << zero_forms << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orbit classification and Waring rank bounds for real "
                 "ternary cubics"};
    app.require_subcommand(1);

    std::string form, point_csv, line_csv, catalog_path;
    bool as_json = false;
    long count = 100, bound = 20;
    unsigned long seed = 42;

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "orbit, ranks, and a certificate");
    cmd_classify->add_option("form", form, "polynomial in x, y, z")
        ->required();
    cmd_classify->add_flag("--json", as_json, "machine-readable report");

    CLI::App* cmd_hessian =
        app.add_subcommand("hessian", "hessian determinant cubic");
    cmd_hessian->add_option("form", form, "polynomial in x, y, z")->required();

    CLI::App* cmd_polar =
        app.add_subcommand("polar", "polar conic at a point");
    cmd_polar->add_option("form", form, "polynomial in x, y, z")->required();
    cmd_polar->add_option("--point", point_csv, "point a,b,c")->required();

    CLI::App* cmd_depaolis = app.add_subcommand(
        "depaolis", "four-line certificate through a chosen line");
    cmd_depaolis->add_option("form", form, "polynomial in x, y, z")
        ->required();
    cmd_depaolis->add_option("--line", line_csv, "line a,b,c")->required();

    CLI::App* cmd_decompose =
        app.add_subcommand("decompose", "rank bounds and a certificate");
    cmd_decompose->add_option("form", form, "polynomial in x, y, z")
        ->required();
    cmd_decompose->add_flag("--json", as_json, "machine-readable report");

    CLI::App* cmd_binary =
        app.add_subcommand("binary", "binary cubic rank in x and y");
    cmd_binary->add_option("form", form, "polynomial in x, y")->required();

    CLI::App* cmd_verify =
        app.add_subcommand("verify-catalog", "re-derive every catalog claim");
    cmd_verify->add_option("--catalog", catalog_path,
                           "catalog file (default: builtin)");

    CLI::App* cmd_sample = app.add_subcommand(
        "sample", "classify random integer cubics and tally the orbits");
    cmd_sample->add_option("--count", count, "number of samples")
        ->check(CLI::PositiveNumber);
    cmd_sample->add_option("--seed", seed, "random seed");
    cmd_sample->add_option("--bound", bound, "coefficient bound")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    if (cmd_classify->parsed()) return run_classify(form, as_json);
    if (cmd_hessian->parsed()) return run_hessian(form);
    if (cmd_polar->parsed()) return run_polar(form, point_csv);
    if (cmd_depaolis->parsed()) return run_depaolis(form, line_csv);
    if (cmd_decompose->parsed()) return run_decompose(form, as_json);
    if (cmd_binary->parsed()) return run_binary(form);
    if (cmd_verify->parsed()) return run_verify_catalog(catalog_path);
    if (cmd_sample->parsed()) return run_sample(count, seed, bound);
    return kBadInput;
}
