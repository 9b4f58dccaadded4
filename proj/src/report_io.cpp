#include "cusp/report_io.hpp"

#include <algorithm>
#include <sstream>

namespace cusp::report {

namespace {

using nlohmann::json;

constexpr std::int64_t kJsonNumberLimit = 9007199254740992LL; // 2^53

json opt_int(const std::optional<i128>& value) {
    if (!value) return nullptr;
    return encode_int(*value);
}

std::optional<i128> opt_int_from(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return decode_int(*it);
}

json opt_str(const std::optional<std::string>& value) {
    if (!value) return nullptr;
    return *value;
}

std::optional<std::string> opt_str_from(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return it->get<std::string>();
}

void check_envelope(const json& j, std::string_view kind) {
    if (!j.is_object() || j.value("schema_version", -1) != 1)
        throw std::runtime_error("expected a schema_version 1 document");
    if (j.value("kind", "") != kind)
        throw std::runtime_error("expected a \"" + std::string(kind) + "\" document");
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string quoted = "\"";
    for (const char c : value) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Column-aligned plain-text table; widths follow the data.
std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows,
                       const std::vector<bool>& numeric) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c > 0) out << "  ";
        out << (numeric[c] ? pad_left(header[c], width[c]) : pad_right(header[c], width[c]));
    }
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << "  ";
            out << (numeric[c] ? pad_left(row[c], width[c]) : pad_right(row[c], width[c]));
        }
        out << "\n";
    }
    return out.str();
}

json pass_entry_to_json(const PassEntryDoc& entry) {
    return json{{"pairs", entry.pairs},
                {"degree", encode_int(entry.degree)},
                {"p1", encode_int(entry.p1)},
                {"q1", encode_int(entry.q1)},
                {"p2", encode_int(entry.p2)},
                {"q2", encode_int(entry.q2)},
                {"delta", encode_int(entry.delta)},
                {"cbar_sq", encode_int(entry.cbar_sq)},
                {"families", entry.families},
                {"exception", entry.exception},
                {"unexpected", entry.unexpected}};
}

PassEntryDoc pass_entry_from_json(const json& j) {
    PassEntryDoc entry;
    entry.pairs = j.at("pairs").get<std::string>();
    entry.degree = decode_int(j.at("degree"));
    entry.p1 = decode_int(j.at("p1"));
    entry.q1 = decode_int(j.at("q1"));
    entry.p2 = decode_int(j.at("p2"));
    entry.q2 = decode_int(j.at("q2"));
    entry.delta = decode_int(j.at("delta"));
    entry.cbar_sq = decode_int(j.at("cbar_sq"));
    entry.families = j.at("families").get<std::vector<std::string>>();
    entry.exception = j.at("exception").get<bool>();
    entry.unexpected = j.at("unexpected").get<bool>();
    return entry;
}

json instance_to_json(const FamilyInstanceDoc& inst) {
    return json{{"family", inst.family},
                {"params", inst.params},
                {"pairs", inst.pairs},
                {"degenerate", inst.degenerate},
                {"degree", encode_int(inst.degree)},
                {"delta", encode_int(inst.delta)},
                {"cbar_sq", encode_int(inst.cbar_sq)},
                {"expected_kappa", inst.expected_kappa}};
}

FamilyInstanceDoc instance_from_json(const json& j) {
    FamilyInstanceDoc inst;
    inst.family = j.at("family").get<std::string>();
    inst.params = j.at("params").get<std::string>();
    inst.pairs = j.at("pairs").get<std::string>();
    inst.degenerate = j.at("degenerate").get<bool>();
    inst.degree = decode_int(j.at("degree"));
    inst.delta = decode_int(j.at("delta"));
    inst.cbar_sq = decode_int(j.at("cbar_sq"));
    inst.expected_kappa = j.at("expected_kappa").get<std::string>();
    return inst;
}

std::string enumeration_csv(const std::vector<PassEntryDoc>& candidates) {
    std::ostringstream out;
    out << "degree,p1,q1,p2,q2,delta,cbar_sq,families,exception\n";
    for (const PassEntryDoc& entry : candidates) {
        out << to_dec(entry.degree) << "," << to_dec(entry.p1) << "," << to_dec(entry.q1) << ","
            << to_dec(entry.p2) << "," << to_dec(entry.q2) << "," << to_dec(entry.delta) << ","
            << to_dec(entry.cbar_sq) << "," << csv_field(join(entry.families, ";")) << ","
            << (entry.exception ? "true" : "false") << "\n";
    }
    return out.str();
}

std::vector<std::vector<std::string>> enumeration_rows(const std::vector<PassEntryDoc>& candidates) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(candidates.size());
    for (const PassEntryDoc& entry : candidates) {
        std::string attribution = join(entry.families, "; ");
        if (entry.exception) attribution = attribution.empty() ? "exception" : attribution + "; exception";
        if (entry.unexpected) attribution = "UNEXPECTED";
        rows.push_back({to_dec(entry.degree), entry.pairs, to_dec(entry.delta),
                        to_dec(entry.cbar_sq), attribution});
    }
    return rows;
}

} // namespace

std::optional<OutputFormat> format_from_name(std::string_view name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

json encode_int(i128 value) {
    if (value > -kJsonNumberLimit && value < kJsonNumberLimit)
        return static_cast<std::int64_t>(value);
    return to_dec(value);
}

i128 decode_int(const json& value) {
    if (value.is_number_integer())
        return static_cast<i128>(value.get<std::int64_t>());
    if (value.is_number_unsigned())
        return static_cast<i128>(value.get<std::uint64_t>());
    if (value.is_string()) {
        const auto parsed = parse_decimal(value.get<std::string>());
        if (parsed) return *parsed;
    }
    throw std::runtime_error("expected an integer (number or decimal string)");
}

std::string kappa_hint_name(KodairaHint hint) {
    return hint == KodairaHint::MinusInfinity ? "minus_infinity" : "one_or_two";
}

std::string kappa_expect_name(KodairaExpect expect) {
    switch (expect) {
    case KodairaExpect::MinusInfinity: return "minus_infinity";
    case KodairaExpect::One: return "one";
    case KodairaExpect::Two: return "two";
    }
    return "?";
}

std::string family_token(FamilyId f, const FamilyParams& p) {
    return std::string(family_name(f)) + "(" + format_params(f, p) + ")";
}

// ---------------------------------------------------------------------------
// Builders

CriterionDoc make_criterion_doc(const ValidatedType& t, std::optional<i128> degree,
                                const std::optional<CriterionReport>& report) {
    CriterionDoc doc;
    doc.pairs = format_type(t);
    doc.degenerate = std::holds_alternative<DegeneratePuiseuxType>(t);
    doc.delta = delta(t);
    doc.degree = degree;
    if (!report) {
        doc.verdict = "no_integer_degree";
        return doc;
    }
    doc.verdict = report->passed() ? "pass" : "fail";
    doc.fail_at = report->fail_at;
    doc.rows.reserve(report->rows.size());
    for (const CriterionRow& row : report->rows)
        doc.rows.push_back({row.j, row.r, row.target});
    return doc;
}

InvariantsDoc make_invariants_doc(const ValidatedType& t) {
    InvariantsDoc doc;
    doc.pairs = format_type(t);
    doc.degenerate = std::holds_alternative<DegeneratePuiseuxType>(t);
    doc.delta = delta(t);
    doc.generators = generator_list(t);
    doc.conductor = checked_mul(2, doc.delta);
    const DegreeFromDelta deg = degree_from_delta(doc.delta);
    if (deg.found()) {
        doc.degree = deg.degree;
        if (const auto* two = std::get_if<NewtonPairType>(&t)) {
            doc.cbar_sq = cbar_squared(*two, deg.degree);
            doc.kappa_hint = kappa_hint_name(kodaira_hint(*doc.cbar_sq));
        } else {
            doc.note = "one Puiseux pair; no self-intersection formula applies";
        }
    } else {
        doc.note = deg.status == DegreeFromDelta::Status::DegenerateDegree
                       ? "delta 0 corresponds to degrees 1 and 2; no cuspidal candidate"
                       : "(d-1)(d-2) = 2*delta has no integer solution";
    }
    return doc;
}

FamilyInstanceDoc make_family_instance_doc(const FamilyInstance& inst) {
    FamilyInstanceDoc doc;
    doc.family = std::string(family_name(inst.family));
    doc.params = format_params(inst.family, inst.params);
    doc.pairs = format_type(inst.ntype);
    doc.degenerate = inst.degenerate;
    doc.degree = inst.degree;
    doc.delta = inst.delta;
    doc.cbar_sq = inst.cbar_sq;
    doc.expected_kappa = kappa_expect_name(inst.expected_kappa);
    return doc;
}

FamiliesDoc make_families_doc(std::optional<FamilyId> family, i128 max_degree,
                              const std::vector<FamilyInstance>& instances) {
    FamiliesDoc doc;
    doc.max_degree = max_degree;
    if (family) doc.family = std::string(family_name(*family));
    doc.instances.reserve(instances.size());
    for (const FamilyInstance& inst : instances)
        doc.instances.push_back(make_family_instance_doc(inst));
    return doc;
}

PassEntryDoc make_pass_entry_doc(const PassEntry& entry) {
    PassEntryDoc doc;
    doc.pairs = format_type(entry.type);
    doc.degree = entry.degree;
    doc.p1 = entry.type.p1;
    doc.q1 = entry.type.q1;
    doc.p2 = entry.type.p2;
    doc.q2 = entry.type.q2;
    doc.delta = entry.delta;
    doc.cbar_sq = entry.cbar_sq;
    for (const auto& [family, params] : entry.families)
        doc.families.push_back(family_token(family, params));
    doc.exception = entry.known_exception;
    doc.unexpected = entry.unexpected();
    return doc;
}

EnumerationDoc make_enumeration_doc(const EnumerationReport& report, const CrossCheckDiff& diff) {
    EnumerationDoc doc;
    doc.max_degree = report.max_degree;
    doc.candidates.reserve(report.candidates.size());
    for (const PassEntry& entry : report.candidates)
        doc.candidates.push_back(make_pass_entry_doc(entry));
    doc.stats = {report.stats.scanned, report.stats.no_integer_degree, report.stats.sdp_failures,
                 report.stats.passes};
    for (const FamilyInstance& inst : diff.missing)
        doc.crosscheck_missing.push_back(make_family_instance_doc(inst));
    for (const PassEntry& entry : diff.unexpected)
        doc.crosscheck_unexpected.push_back(make_pass_entry_doc(entry));
    return doc;
}

CrossCheckDoc make_crosscheck_doc(i128 max_degree, const CrossCheckDiff& diff) {
    CrossCheckDoc doc;
    doc.max_degree = max_degree;
    for (const FamilyInstance& inst : diff.missing)
        doc.missing.push_back(make_family_instance_doc(inst));
    for (const PassEntry& entry : diff.unexpected)
        doc.unexpected.push_back(make_pass_entry_doc(entry));
    return doc;
}

IdentifyDoc make_identify_doc(const ValidatedType& t, i128 degree,
                              const std::vector<std::pair<FamilyId, FamilyParams>>& matches) {
    IdentifyDoc doc;
    doc.pairs = format_type(t);
    doc.degree = degree;
    for (const auto& [family, params] : matches)
        doc.matches.push_back({std::string(family_name(family)), format_params(family, params)});
    if (const auto* two = std::get_if<NewtonPairType>(&t)) {
        for (const ExceptionalType& exc : known_exceptions()) {
            if (exc.ntype == *two && exc.degree == degree) {
                doc.known_exception = true;
                doc.exclusion_note = exc.exclusion_note;
            }
        }
    }
    return doc;
}

// ---------------------------------------------------------------------------
// JSON

json to_json(const CriterionDoc& doc) {
    json rows = json::array();
    for (const CriterionRowDoc& row : doc.rows)
        rows.push_back(json{{"j", encode_int(row.j)}, {"r", encode_int(row.r)}, {"target", encode_int(row.target)}});
    return json{{"schema_version", 1}, {"kind", "criterion"},   {"pairs", doc.pairs},
                {"degenerate", doc.degenerate}, {"delta", encode_int(doc.delta)},
                {"degree", opt_int(doc.degree)}, {"verdict", doc.verdict},
                {"fail_at", opt_int(doc.fail_at)}, {"rows", rows}};
}

CriterionDoc criterion_from_json(const json& j) {
    check_envelope(j, "criterion");
    CriterionDoc doc;
    doc.pairs = j.at("pairs").get<std::string>();
    doc.degenerate = j.at("degenerate").get<bool>();
    doc.delta = decode_int(j.at("delta"));
    doc.degree = opt_int_from(j, "degree");
    doc.verdict = j.at("verdict").get<std::string>();
    doc.fail_at = opt_int_from(j, "fail_at");
    for (const json& row : j.at("rows"))
        doc.rows.push_back({decode_int(row.at("j")), decode_int(row.at("r")), decode_int(row.at("target"))});
    return doc;
}

json to_json(const InvariantsDoc& doc) {
    json generators = json::array();
    for (const i128 g : doc.generators) generators.push_back(encode_int(g));
    return json{{"schema_version", 1}, {"kind", "invariants"}, {"pairs", doc.pairs},
                {"degenerate", doc.degenerate}, {"delta", encode_int(doc.delta)},
                {"generators", generators}, {"conductor", encode_int(doc.conductor)},
                {"degree", opt_int(doc.degree)}, {"cbar_sq", opt_int(doc.cbar_sq)},
                {"kappa_hint", opt_str(doc.kappa_hint)}, {"note", opt_str(doc.note)}};
}

InvariantsDoc invariants_from_json(const json& j) {
    check_envelope(j, "invariants");
    InvariantsDoc doc;
    doc.pairs = j.at("pairs").get<std::string>();
    doc.degenerate = j.at("degenerate").get<bool>();
    doc.delta = decode_int(j.at("delta"));
    for (const json& g : j.at("generators")) doc.generators.push_back(decode_int(g));
    doc.conductor = decode_int(j.at("conductor"));
    doc.degree = opt_int_from(j, "degree");
    doc.cbar_sq = opt_int_from(j, "cbar_sq");
    doc.kappa_hint = opt_str_from(j, "kappa_hint");
    doc.note = opt_str_from(j, "note");
    return doc;
}

json to_json(const FamiliesDoc& doc) {
    json instances = json::array();
    for (const FamilyInstanceDoc& inst : doc.instances) instances.push_back(instance_to_json(inst));
    return json{{"schema_version", 1}, {"kind", "families"},
                {"max_degree", encode_int(doc.max_degree)}, {"family", opt_str(doc.family)},
                {"instances", instances}};
}

FamiliesDoc families_from_json(const json& j) {
    check_envelope(j, "families");
    FamiliesDoc doc;
    doc.max_degree = decode_int(j.at("max_degree"));
    doc.family = opt_str_from(j, "family");
    for (const json& inst : j.at("instances")) doc.instances.push_back(instance_from_json(inst));
    return doc;
}

json to_json(const EnumerationDoc& doc) {
    json candidates = json::array();
    for (const PassEntryDoc& entry : doc.candidates) candidates.push_back(pass_entry_to_json(entry));
    json missing = json::array();
    for (const FamilyInstanceDoc& inst : doc.crosscheck_missing) missing.push_back(instance_to_json(inst));
    json unexpected = json::array();
    for (const PassEntryDoc& entry : doc.crosscheck_unexpected) unexpected.push_back(pass_entry_to_json(entry));
    return json{{"schema_version", 1}, {"kind", "enumeration"},
                {"max_degree", encode_int(doc.max_degree)}, {"candidates", candidates},
                {"stats", json{{"scanned", doc.stats.scanned},
                               {"no_integer_degree", doc.stats.no_integer_degree},
                               {"sdp_failures", doc.stats.sdp_failures},
                               {"passes", doc.stats.passes}}},
                {"crosscheck", json{{"missing", missing}, {"unexpected", unexpected}}}};
}

EnumerationDoc enumeration_from_json(const json& j) {
    check_envelope(j, "enumeration");
    EnumerationDoc doc;
    doc.max_degree = decode_int(j.at("max_degree"));
    for (const json& entry : j.at("candidates")) doc.candidates.push_back(pass_entry_from_json(entry));
    const json& stats = j.at("stats");
    doc.stats = {stats.at("scanned").get<std::uint64_t>(),
                 stats.at("no_integer_degree").get<std::uint64_t>(),
                 stats.at("sdp_failures").get<std::uint64_t>(),
                 stats.at("passes").get<std::uint64_t>()};
    const json& crosscheck = j.at("crosscheck");
    for (const json& inst : crosscheck.at("missing")) doc.crosscheck_missing.push_back(instance_from_json(inst));
    for (const json& entry : crosscheck.at("unexpected")) doc.crosscheck_unexpected.push_back(pass_entry_from_json(entry));
    return doc;
}

json to_json(const CrossCheckDoc& doc) {
    json missing = json::array();
    for (const FamilyInstanceDoc& inst : doc.missing) missing.push_back(instance_to_json(inst));
    json unexpected = json::array();
    for (const PassEntryDoc& entry : doc.unexpected) unexpected.push_back(pass_entry_to_json(entry));
    return json{{"schema_version", 1}, {"kind", "crosscheck"},
                {"max_degree", encode_int(doc.max_degree)}, {"missing", missing},
                {"unexpected", unexpected}};
}

CrossCheckDoc crosscheck_from_json(const json& j) {
    check_envelope(j, "crosscheck");
    CrossCheckDoc doc;
    doc.max_degree = decode_int(j.at("max_degree"));
    for (const json& inst : j.at("missing")) doc.missing.push_back(instance_from_json(inst));
    for (const json& entry : j.at("unexpected")) doc.unexpected.push_back(pass_entry_from_json(entry));
    return doc;
}

json to_json(const IdentifyDoc& doc) {
    json matches = json::array();
    for (const IdentifyMatchDoc& match : doc.matches)
        matches.push_back(json{{"family", match.family}, {"params", match.params}});
    return json{{"schema_version", 1}, {"kind", "identify"},     {"pairs", doc.pairs},
                {"degree", encode_int(doc.degree)}, {"matches", matches},
                {"known_exception", doc.known_exception}, {"exclusion_note", opt_str(doc.exclusion_note)}};
}

IdentifyDoc identify_from_json(const json& j) {
    check_envelope(j, "identify");
    IdentifyDoc doc;
    doc.pairs = j.at("pairs").get<std::string>();
    doc.degree = decode_int(j.at("degree"));
    for (const json& match : j.at("matches"))
        doc.matches.push_back({match.at("family").get<std::string>(), match.at("params").get<std::string>()});
    doc.known_exception = j.at("known_exception").get<bool>();
    doc.exclusion_note = opt_str_from(j, "exclusion_note");
    return doc;
}

// ---------------------------------------------------------------------------
// Renderings

std::string render(const CriterionDoc& doc, OutputFormat format) {
    if (format == OutputFormat::Json) return to_json(doc).dump(2) + "\n";
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "j,r,target\n";
        for (const CriterionRowDoc& row : doc.rows)
            out << to_dec(row.j) << "," << to_dec(row.r) << "," << to_dec(row.target) << "\n";
        return out.str();
    }
    std::ostringstream out;
    out << "pairs: " << doc.pairs << "\n";
    out << "delta: " << to_dec(doc.delta) << "\n";
    if (doc.degree)
        out << "degree: " << to_dec(*doc.degree) << "\n";
    else
        out << "degree: none ((d-1)(d-2) = 2*delta has no integer solution)\n";
    if (!doc.rows.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (const CriterionRowDoc& row : doc.rows)
            rows.push_back({to_dec(row.j), to_dec(row.r), to_dec(row.target)});
        out << text_table({"j", "R(jd)", "target"}, rows, {true, true, true});
    }
    if (doc.verdict == "pass")
        out << "verdict: PASS\n";
    else if (doc.verdict == "fail")
        out << "verdict: FAIL at j=" << to_dec(doc.fail_at.value_or(-1)) << "\n";
    else
        out << "verdict: NO_INTEGER_DEGREE\n";
    return out.str();
}

std::string render(const InvariantsDoc& doc, OutputFormat format) {
    if (format == OutputFormat::Json) return to_json(doc).dump(2) + "\n";
    std::vector<std::string> generators;
    for (const i128 g : doc.generators) generators.push_back(to_dec(g));
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "pairs,degenerate,delta,g0,g1,g2,conductor,degree,cbar_sq,kappa_hint\n";
        out << csv_field(doc.pairs) << "," << (doc.degenerate ? "true" : "false") << ","
            << to_dec(doc.delta) << "," << generators[0] << "," << generators[1] << ","
            << (generators.size() > 2 ? generators[2] : "") << "," << to_dec(doc.conductor) << ","
            << (doc.degree ? to_dec(*doc.degree) : "") << ","
            << (doc.cbar_sq ? to_dec(*doc.cbar_sq) : "") << "," << doc.kappa_hint.value_or("")
            << "\n";
        return out.str();
    }
    std::ostringstream out;
    out << "pairs: " << doc.pairs << "\n";
    out << "degenerate: " << (doc.degenerate ? "yes" : "no") << "\n";
    out << "delta: " << to_dec(doc.delta) << "\n";
    out << "generators: " << join(generators, " ") << "\n";
    out << "conductor: " << to_dec(doc.conductor) << "\n";
    out << "degree: " << (doc.degree ? to_dec(*doc.degree) : "none") << "\n";
    if (doc.cbar_sq) out << "cbar_sq: " << to_dec(*doc.cbar_sq) << "\n";
    if (doc.kappa_hint) out << "kappa_hint: " << *doc.kappa_hint << "\n";
    if (doc.note) out << "note: " << *doc.note << "\n";
    return out.str();
}

std::string render(const FamiliesDoc& doc, OutputFormat format) {
    if (format == OutputFormat::Json) return to_json(doc).dump(2) + "\n";
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "family,params,pairs,degenerate,degree,delta,cbar_sq,expected_kappa\n";
        for (const FamilyInstanceDoc& inst : doc.instances)
            out << inst.family << "," << csv_field(inst.params) << "," << csv_field(inst.pairs)
                << "," << (inst.degenerate ? "true" : "false") << "," << to_dec(inst.degree) << ","
                << to_dec(inst.delta) << "," << to_dec(inst.cbar_sq) << "," << inst.expected_kappa
                << "\n";
        return out.str();
    }
    std::vector<std::vector<std::string>> rows;
    for (const FamilyInstanceDoc& inst : doc.instances)
        rows.push_back({inst.family, inst.params, inst.pairs, to_dec(inst.degree),
                        to_dec(inst.delta), to_dec(inst.cbar_sq), inst.expected_kappa,
                        inst.degenerate ? "yes" : "no"});
    std::ostringstream out;
    out << text_table({"family", "params", "pairs", "degree", "delta", "cbar_sq", "kappa", "degenerate"},
                      rows, {false, false, false, true, true, true, false, false});
    out << "instances: " << doc.instances.size() << "\n";
    return out.str();
}

std::string render(const EnumerationDoc& doc, OutputFormat format) {
    if (format == OutputFormat::Json) return to_json(doc).dump(2) + "\n";
    if (format == OutputFormat::Csv) return enumeration_csv(doc.candidates);
    std::ostringstream out;
    out << text_table({"degree", "pairs", "delta", "cbar_sq", "families"},
                      enumeration_rows(doc.candidates), {true, false, true, true, false});
    out << "stats: scanned=" << doc.stats.scanned
        << " no_integer_degree=" << doc.stats.no_integer_degree
        << " sdp_failures=" << doc.stats.sdp_failures << " passes=" << doc.stats.passes << "\n";
    out << "crosscheck: missing=" << doc.crosscheck_missing.size()
        << " unexpected=" << doc.crosscheck_unexpected.size() << "\n";
    return out.str();
}

std::string render(const CrossCheckDoc& doc, OutputFormat format) {
    if (format == OutputFormat::Json) return to_json(doc).dump(2) + "\n";
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "list,pairs,degree,detail\n";
        for (const FamilyInstanceDoc& inst : doc.missing)
            out << "missing," << csv_field(inst.pairs) << "," << to_dec(inst.degree) << ","
                << csv_field(inst.family + "(" + inst.params + ")") << "\n";
        for (const PassEntryDoc& entry : doc.unexpected)
            out << "unexpected," << csv_field(entry.pairs) << "," << to_dec(entry.degree) << ",\n";
        return out.str();
    }
    std::ostringstream out;
    out << "missing: " << doc.missing.size() << "\n";
    for (const FamilyInstanceDoc& inst : doc.missing)
        out << "  " << inst.family << "(" << inst.params << ") " << inst.pairs << " degree "
            << to_dec(inst.degree) << "\n";
    out << "unexpected: " << doc.unexpected.size() << "\n";
    for (const PassEntryDoc& entry : doc.unexpected)
        out << "  " << entry.pairs << " degree " << to_dec(entry.degree) << "\n";
    return out.str();
}

std::string render(const IdentifyDoc& doc, OutputFormat format) {
    if (format == OutputFormat::Json) return to_json(doc).dump(2) + "\n";
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "family,params,exception_note\n";
        for (const IdentifyMatchDoc& match : doc.matches)
            out << match.family << "," << csv_field(match.params) << ",\n";
        if (doc.matches.empty() && doc.known_exception)
            out << ",," << csv_field(doc.exclusion_note.value_or("")) << "\n";
        return out.str();
    }
    std::ostringstream out;
    out << "pairs: " << doc.pairs << "\n";
    out << "degree: " << to_dec(doc.degree) << "\n";
    if (!doc.matches.empty()) {
        std::vector<std::string> tokens;
        for (const IdentifyMatchDoc& match : doc.matches)
            tokens.push_back(match.family + "(" + match.params + ")");
        out << "families: " << join(tokens, "; ") << "\n";
    } else if (doc.known_exception) {
        out << "no family; known exception (" << doc.exclusion_note.value_or("") << ")\n";
    } else {
        out << "no family\n";
    }
    return out.str();
}

} // namespace cusp::report
