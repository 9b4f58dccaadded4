#include "cusp/report_io.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <sstream>

using namespace cusp;
using namespace cusp::report;
using helpers::two_pair;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("integer encoding switches to strings at 2^53") {
    const std::int64_t limit = 9007199254740992LL; // 2^53
    CHECK(encode_int(limit - 1).is_number_integer());
    CHECK(encode_int(limit).is_string());
    CHECK(encode_int(limit) == "9007199254740992");
    CHECK(encode_int(-(limit - 1)).is_number_integer());
    CHECK(encode_int(-limit).is_string());
    CHECK(encode_int(0) == nlohmann::json(0));

    const i128 huge = checked_mul(i128(limit), i128(limit));
    CHECK(decode_int(encode_int(huge)) == huge);
    CHECK(decode_int(encode_int(-huge)) == -huge);
    CHECK(decode_int(nlohmann::json(12)) == 12);
    CHECK(decode_int(nlohmann::json("12")) == 12);
    CHECK_THROWS(decode_int(nlohmann::json("12x")));
    CHECK_THROWS(decode_int(nlohmann::json(1.5)));
}

TEST_CASE("criterion document round-trips") {
    const ValidatedType t{two_pair(2, 3, 2, 5)};
    const auto doc = make_criterion_doc(t, 6, check_sdp(t, 6));
    CHECK(doc.verdict == "pass");
    CHECK(doc.rows.size() == 4);
    CHECK(criterion_from_json(to_json(doc)) == doc);
    CHECK(criterion_from_json(nlohmann::json::parse(render(doc, OutputFormat::Json))) == doc);

    const ValidatedType bad{two_pair(2, 5, 2, 3)};
    const auto failing = make_criterion_doc(bad, 7, check_sdp(bad, 7));
    CHECK(failing.verdict == "fail");
    CHECK(failing.fail_at == i128(1));
    CHECK(criterion_from_json(to_json(failing)) == failing);

    const ValidatedType no_deg{two_pair(2, 3, 2, 7)};
    const auto none = make_criterion_doc(no_deg, std::nullopt, std::nullopt);
    CHECK(none.verdict == "no_integer_degree");
    CHECK(!none.degree.has_value());
    CHECK(criterion_from_json(to_json(none)) == none);

    CHECK_THROWS(criterion_from_json(to_json(make_invariants_doc(t))));
}

TEST_CASE("invariants document round-trips") {
    const auto doc = make_invariants_doc(ValidatedType{two_pair(7, 48, 3, 1)});
    CHECK(doc.delta == 1431);
    CHECK(doc.generators == std::vector<i128>{21, 144, 1009});
    CHECK(doc.conductor == 2862);
    CHECK(doc.degree == i128(55));
    CHECK(doc.cbar_sq == i128(-2));
    CHECK(doc.kappa_hint == "one_or_two");
    CHECK(invariants_from_json(to_json(doc)) == doc);

    const auto none = make_invariants_doc(ValidatedType{two_pair(2, 3, 2, 7)});
    CHECK(none.delta == 11);
    CHECK(!none.degree.has_value());
    CHECK(none.note.has_value());
    CHECK(invariants_from_json(to_json(none)) == none);

    const auto degenerate = make_invariants_doc(ValidatedType{DegeneratePuiseuxType{4, 25}});
    CHECK(degenerate.degenerate);
    CHECK(degenerate.generators == std::vector<i128>{4, 25});
    CHECK(degenerate.degree == i128(10));
    CHECK(!degenerate.cbar_sq.has_value());
    CHECK(invariants_from_json(to_json(degenerate)) == degenerate);
}

TEST_CASE("families and identify documents round-trip") {
    const auto instances = enumerate_family(FamilyId::V, 60);
    const auto doc = make_families_doc(FamilyId::V, 60, instances);
    CHECK(doc.instances.size() == 5);
    CHECK(families_from_json(to_json(doc)) == doc);

    const ValidatedType exc{two_pair(2, 7, 4, 17)};
    const auto ident = make_identify_doc(exc, 17, identify(exc, 17));
    CHECK(ident.matches.empty());
    CHECK(ident.known_exception);
    CHECK(ident.exclusion_note == "SS fails at l = 12");
    CHECK(identify_from_json(to_json(ident)) == ident);

    const ValidatedType iii{two_pair(2, 3, 2, 5)};
    const auto matched = make_identify_doc(iii, 6, identify(iii, 6));
    REQUIRE(matched.matches.size() == 1);
    CHECK(matched.matches[0].family == "III");
    CHECK(matched.matches[0].params == "n=3,m=2");
    CHECK(identify_from_json(to_json(matched)) == matched);
}

TEST_CASE("enumeration and crosscheck documents round-trip") {
    const auto rep = enumerate_candidates(17, 2);
    const auto diff = cross_check(rep);
    const auto doc = make_enumeration_doc(rep, diff);
    CHECK(enumeration_from_json(to_json(doc)) == doc);
    CHECK(enumeration_from_json(nlohmann::json::parse(render(doc, OutputFormat::Json))) == doc);

    const auto cc = make_crosscheck_doc(17, diff);
    CHECK(cc.missing.empty());
    CHECK(cc.unexpected.size() == 3); // (2,9)(2,5)/9, (3,13)(2,7)/13, (4,17)(2,9)/17
    CHECK(crosscheck_from_json(to_json(cc)) == cc);
}

TEST_CASE("the degree-10 enumeration CSV is stable") {
    const auto rep = enumerate_candidates(10, 1);
    const auto doc = make_enumeration_doc(rep, cross_check(rep));
    const std::string expected =
        "degree,p1,q1,p2,q2,delta,cbar_sq,families,exception\n"
        "6,2,3,2,5,10,2,\"III(n=3,m=2)\",false\n"
        "8,2,7,2,3,21,2,\"IV(n=2,m=2)\",false\n"
        "8,3,4,2,7,21,2,\"III(n=4,m=2)\",false\n"
        "9,2,3,3,8,28,3,\"III(n=3,m=3)\",false\n"
        "9,2,9,2,5,28,-1,,false\n"
        "10,2,3,3,16,36,-2,V(n=3),false\n"
        "10,4,5,2,9,36,2,\"III(n=5,m=2)\",false\n";
    CHECK(render(doc, OutputFormat::Csv) == expected);
}

TEST_CASE("csv, json and table carry the same numbers") {
    const auto rep = enumerate_candidates(20, 2);
    const auto doc = make_enumeration_doc(rep, cross_check(rep));

    const std::string csv = render(doc, OutputFormat::Csv);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line); // header
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        REQUIRE(row < doc.candidates.size());
        const auto fields = split_csv_line(line);
        REQUIRE(fields.size() == 9);
        const auto& entry = doc.candidates[row];
        CHECK(fields[0] == to_dec(entry.degree));
        CHECK(fields[1] == to_dec(entry.p1));
        CHECK(fields[2] == to_dec(entry.q1));
        CHECK(fields[3] == to_dec(entry.p2));
        CHECK(fields[4] == to_dec(entry.q2));
        CHECK(fields[5] == to_dec(entry.delta));
        CHECK(fields[6] == to_dec(entry.cbar_sq));
        CHECK(fields[8] == (entry.exception ? "true" : "false"));
        ++row;
    }
    CHECK(row == doc.candidates.size());

    const auto parsed = enumeration_from_json(nlohmann::json::parse(render(doc, OutputFormat::Json)));
    CHECK(parsed == doc);

    const std::string table = render(doc, OutputFormat::Table);
    for (const auto& entry : doc.candidates) {
        CHECK(table.find(entry.pairs) != std::string::npos);
        CHECK(table.find(to_dec(entry.delta)) != std::string::npos);
    }
    CHECK(table.find("passes=" + std::to_string(doc.stats.passes)) != std::string::npos);
}

TEST_CASE("format names") {
    CHECK(format_from_name("table") == OutputFormat::Table);
    CHECK(format_from_name("json") == OutputFormat::Json);
    CHECK(format_from_name("csv") == OutputFormat::Csv);
    CHECK(!format_from_name("yaml").has_value());
}

} // TEST_SUITE
