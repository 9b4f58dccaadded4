#pragma once

#include "cusp/enumerator.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cusp::report {

enum class OutputFormat { Table, Json, Csv };

std::optional<OutputFormat> format_from_name(std::string_view name);

// Integers below 2^53 in magnitude travel as JSON numbers; anything larger
// becomes a decimal string so the Fibonacci families survive double-parsing
// consumers.
nlohmann::json encode_int(i128 value);
i128 decode_int(const nlohmann::json& value);

// ---------------------------------------------------------------------------
// Plain document structs: everything the three renderings share. All JSON
// emitters/parsers below are exact inverses on these.

struct CriterionRowDoc {
    i128 j = 0;
    i128 r = 0;
    i128 target = 0;
    bool operator==(const CriterionRowDoc&) const = default;
};

struct CriterionDoc {
    std::string pairs;
    bool degenerate = false;
    i128 delta = 0;
    std::optional<i128> degree;   // absent: no integer degree
    std::string verdict;          // "pass" | "fail" | "no_integer_degree"
    std::optional<i128> fail_at;
    std::vector<CriterionRowDoc> rows;
    bool operator==(const CriterionDoc&) const = default;
};

struct InvariantsDoc {
    std::string pairs;
    bool degenerate = false;
    i128 delta = 0;
    std::vector<i128> generators;
    i128 conductor = 0;
    std::optional<i128> degree;
    std::optional<i128> cbar_sq;
    std::optional<std::string> kappa_hint; // "minus_infinity" | "one_or_two"
    std::optional<std::string> note;
    bool operator==(const InvariantsDoc&) const = default;
};

struct FamilyInstanceDoc {
    std::string family;
    std::string params;
    std::string pairs;
    bool degenerate = false;
    i128 degree = 0;
    i128 delta = 0;
    i128 cbar_sq = 0;
    std::string expected_kappa; // "minus_infinity" | "one" | "two"
    bool operator==(const FamilyInstanceDoc&) const = default;
};

struct FamiliesDoc {
    i128 max_degree = 0;
    std::optional<std::string> family; // absent: all families
    std::vector<FamilyInstanceDoc> instances;
    bool operator==(const FamiliesDoc&) const = default;
};

struct PassEntryDoc {
    std::string pairs;
    i128 degree = 0;
    i128 p1 = 0, q1 = 0, p2 = 0, q2 = 0;
    i128 delta = 0;
    i128 cbar_sq = 0;
    std::vector<std::string> families; // "III(n=3,m=2)" tokens
    bool exception = false;
    bool unexpected = false;
    bool operator==(const PassEntryDoc&) const = default;
};

struct StatsDoc {
    std::uint64_t scanned = 0;
    std::uint64_t no_integer_degree = 0;
    std::uint64_t sdp_failures = 0;
    std::uint64_t passes = 0;
    bool operator==(const StatsDoc&) const = default;
};

struct CrossCheckDoc {
    i128 max_degree = 0;
    std::vector<FamilyInstanceDoc> missing;
    std::vector<PassEntryDoc> unexpected;
    bool operator==(const CrossCheckDoc&) const = default;
};

struct EnumerationDoc {
    i128 max_degree = 0;
    std::vector<PassEntryDoc> candidates;
    StatsDoc stats;
    std::vector<FamilyInstanceDoc> crosscheck_missing;
    std::vector<PassEntryDoc> crosscheck_unexpected;
    bool operator==(const EnumerationDoc&) const = default;
};

struct IdentifyMatchDoc {
    std::string family;
    std::string params;
    bool operator==(const IdentifyMatchDoc&) const = default;
};

struct IdentifyDoc {
    std::string pairs;
    i128 degree = 0;
    std::vector<IdentifyMatchDoc> matches;
    bool known_exception = false;
    std::optional<std::string> exclusion_note;
    bool operator==(const IdentifyDoc&) const = default;
};

// ---------------------------------------------------------------------------
// Builders from domain values.

std::string kappa_hint_name(KodairaHint hint);
std::string kappa_expect_name(KodairaExpect expect);
std::string family_token(FamilyId f, const FamilyParams& p); // "III(n=3,m=2)"

CriterionDoc make_criterion_doc(const ValidatedType& t, std::optional<i128> degree,
                                const std::optional<CriterionReport>& report);
InvariantsDoc make_invariants_doc(const ValidatedType& t);
FamilyInstanceDoc make_family_instance_doc(const FamilyInstance& inst);
FamiliesDoc make_families_doc(std::optional<FamilyId> family, i128 max_degree,
                              const std::vector<FamilyInstance>& instances);
PassEntryDoc make_pass_entry_doc(const PassEntry& entry);
EnumerationDoc make_enumeration_doc(const EnumerationReport& report, const CrossCheckDiff& diff);
CrossCheckDoc make_crosscheck_doc(i128 max_degree, const CrossCheckDiff& diff);
IdentifyDoc make_identify_doc(const ValidatedType& t, i128 degree,
                              const std::vector<std::pair<FamilyId, FamilyParams>>& matches);

// ---------------------------------------------------------------------------
// JSON: every document carries {"schema_version": 1, "kind": ...}; parsers
// check both and reconstruct the document exactly.

nlohmann::json to_json(const CriterionDoc& doc);
nlohmann::json to_json(const InvariantsDoc& doc);
nlohmann::json to_json(const FamiliesDoc& doc);
nlohmann::json to_json(const EnumerationDoc& doc);
nlohmann::json to_json(const CrossCheckDoc& doc);
nlohmann::json to_json(const IdentifyDoc& doc);

CriterionDoc criterion_from_json(const nlohmann::json& j);
InvariantsDoc invariants_from_json(const nlohmann::json& j);
FamiliesDoc families_from_json(const nlohmann::json& j);
EnumerationDoc enumeration_from_json(const nlohmann::json& j);
CrossCheckDoc crosscheck_from_json(const nlohmann::json& j);
IdentifyDoc identify_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Renderings. All three formats of a document carry the same numeric
// content; none embeds timings, so equal documents render byte-identically.

std::string render(const CriterionDoc& doc, OutputFormat format);
std::string render(const InvariantsDoc& doc, OutputFormat format);
std::string render(const FamiliesDoc& doc, OutputFormat format);
std::string render(const EnumerationDoc& doc, OutputFormat format);
std::string render(const CrossCheckDoc& doc, OutputFormat format);
std::string render(const IdentifyDoc& doc, OutputFormat format);

} // namespace cusp::report
