#include "cusp/report_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

using namespace cusp;

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

unsigned default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return kExitPass;
    }
    std::ofstream out(output_path);
    if (!out) {
        std::cerr << "error: cannot open output file " << output_path << "\n";
        return kExitUsage;
    }
    out << text;
    return kExitPass;
}

// Parses and validates --pairs; prints to stderr and returns nullopt on any
// usage-grade failure (malformed string or rejected type).
std::optional<ValidatedType> parse_and_validate(const std::string& pairs) {
    const auto parsed = parse_pair_string(pairs);
    if (const auto* err = std::get_if<ParseError>(&parsed)) {
        std::cerr << "error: " << err->message << "\n";
        return std::nullopt;
    }
    const auto& v = std::get<std::array<i128, 4>>(parsed);
    const ValidationResult validated = validate_type(v[0], v[1], v[2], v[3]);
    if (const auto* rejected = std::get_if<RejectedType>(&validated)) {
        std::cerr << "error: " << reject_reason_text(rejected->reason) << "\n";
        return std::nullopt;
    }
    if (const auto* two = std::get_if<NewtonPairType>(&validated)) return ValidatedType{*two};
    return ValidatedType{std::get<DegeneratePuiseuxType>(validated)};
}

int cmd_check(const std::string& pairs, std::optional<i128> degree,
              report::OutputFormat format, const std::string& output_path) {
    const auto type = parse_and_validate(pairs);
    if (!type) return kExitUsage;

    const i128 dlt = delta(*type);
    std::optional<i128> d = degree;
    if (!d) {
        const DegreeFromDelta derived = degree_from_delta(dlt);
        if (!derived.found()) {
            const auto doc = report::make_criterion_doc(*type, std::nullopt, std::nullopt);
            const int rc = emit(report::render(doc, format), output_path);
            return rc == kExitPass ? kExitMathFail : rc;
        }
        d = derived.degree;
    }

    CriterionReport rep;
    try {
        rep = check_sdp(*type, *d);
    } catch (const DegreeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    }
    const auto doc = report::make_criterion_doc(*type, d, rep);
    const int rc = emit(report::render(doc, format), output_path);
    if (rc != kExitPass) return rc;
    return rep.passed() ? kExitPass : kExitMathFail;
}

int cmd_invariants(const std::string& pairs, report::OutputFormat format,
                   const std::string& output_path) {
    const auto type = parse_and_validate(pairs);
    if (!type) return kExitUsage;
    const auto doc = report::make_invariants_doc(*type);
    const int rc = emit(report::render(doc, format), output_path);
    if (rc != kExitPass) return rc;
    return doc.degree ? kExitPass : kExitMathFail;
}

int cmd_enumerate(i128 max_degree, unsigned jobs, report::OutputFormat format,
                  const std::string& output_path) {
    const EnumerationReport rep = enumerate_candidates(max_degree, jobs);
    const CrossCheckDiff diff = cross_check(rep);
    const auto doc = report::make_enumeration_doc(rep, diff);
    std::cerr << "elapsed: " << rep.elapsed.count() << " ms\n";
    const int rc = emit(report::render(doc, format), output_path);
    if (rc != kExitPass) return rc;
    return diff.empty() ? kExitPass : kExitMathFail;
}

int cmd_crosscheck(i128 max_degree, unsigned jobs, report::OutputFormat format,
                   const std::string& output_path) {
    const EnumerationReport rep = enumerate_candidates(max_degree, jobs);
    const CrossCheckDiff diff = cross_check(rep);
    const auto doc = report::make_crosscheck_doc(max_degree, diff);
    const int rc = emit(report::render(doc, format), output_path);
    if (rc != kExitPass) return rc;
    return diff.empty() ? kExitPass : kExitMathFail;
}

int cmd_families(const std::string& family_name_arg, i128 max_degree,
                 report::OutputFormat format, const std::string& output_path) {
    if (max_degree < 3) {
        std::cerr << "error: max degree must be at least 3\n";
        return kExitUsage;
    }
    std::optional<FamilyId> family;
    if (!family_name_arg.empty()) {
        family = family_from_name(family_name_arg);
        if (!family) {
            std::cerr << "error: unknown family \"" << family_name_arg
                      << "\" (expected i..viii)\n";
            return kExitUsage;
        }
    }
    std::vector<FamilyInstance> instances;
    if (family) {
        instances = enumerate_family(*family, max_degree);
    } else {
        for (const FamilyId f : kAllFamilies) {
            auto chunk = enumerate_family(f, max_degree);
            instances.insert(instances.end(), chunk.begin(), chunk.end());
        }
    }
    const auto doc = report::make_families_doc(family, max_degree, instances);
    return emit(report::render(doc, format), output_path);
}

int cmd_identify(const std::string& pairs, i128 degree, report::OutputFormat format,
                 const std::string& output_path) {
    const auto type = parse_and_validate(pairs);
    if (!type) return kExitUsage;
    if (degree < 3) {
        std::cerr << "error: degree must be at least 3\n";
        return kExitUsage;
    }
    const auto matches = identify(*type, degree);
    const auto doc = report::make_identify_doc(*type, degree, matches);
    const int rc = emit(report::render(doc, format), output_path);
    if (rc != kExitPass) return rc;
    return (doc.matches.empty() && !doc.known_exception) ? kExitMathFail : kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification toolkit for two-Newton-pair cusp types on rational "
                 "unicuspidal plane curves"};
    app.require_subcommand(1);

    std::string pairs;
    std::string family_arg;
    std::string format_name = "table";
    std::string output_path;
    std::int64_t degree_arg = -1;
    std::int64_t max_degree = -1;
    unsigned jobs = default_jobs();
    if (const char* env_jobs = std::getenv("CUSP_ATLAS_JOBS")) {
        const auto parsed = cusp::parse_decimal(env_jobs);
        if (parsed && *parsed >= 1 && *parsed <= 1024)
            jobs = static_cast<unsigned>(*parsed);
    }

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--output", output_path, "Write the report to PATH instead of stdout");
    };

    auto* check = app.add_subcommand("check", "Run the semigroup counting criterion on a type");
    check->add_option("--pairs", pairs, "Type as \"(p1,q1)(p2,q2)\"")->required();
    check->add_option("--degree", degree_arg, "Candidate degree (default: derived from delta)")
        ->check(CLI::PositiveNumber);
    add_format(check);

    auto* invariants = app.add_subcommand("invariants", "Print the numerical invariants of a type");
    invariants->add_option("--pairs", pairs, "Type as \"(p1,q1)(p2,q2)\"")->required();
    add_format(invariants);

    auto* enumerate = app.add_subcommand("enumerate", "Exhaustively enumerate criterion-passing types");
    enumerate->add_option("--max-degree", max_degree, "Degree bound (>= 3)")->required();
    enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    add_format(enumerate);

    auto* crosscheck = app.add_subcommand("crosscheck", "Compare the enumeration against the families");
    crosscheck->add_option("--max-degree", max_degree, "Degree bound (>= 3)")->required();
    crosscheck->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    add_format(crosscheck);

    auto* families = app.add_subcommand("families", "List family instances up to a degree bound");
    families->add_option("--family", family_arg, "Family id (i..viii); default all");
    families->add_option("--max-degree", max_degree, "Degree bound (>= 3)")->required();
    add_format(families);

    auto* identify_cmd = app.add_subcommand("identify", "Attribute a (type, degree) to the families");
    identify_cmd->add_option("--pairs", pairs, "Type as \"(p1,q1)(p2,q2)\"")->required();
    identify_cmd->add_option("--degree", degree_arg, "Degree of the candidate curve")->required();
    add_format(identify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    const auto format = cusp::report::format_from_name(format_name);
    if (!format) {
        std::cerr << "error: unknown format\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(check)) {
            std::optional<cusp::i128> degree;
            if (degree_arg >= 0) degree = degree_arg;
            return cmd_check(pairs, degree, *format, output_path);
        }
        if (app.got_subcommand(invariants))
            return cmd_invariants(pairs, *format, output_path);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(max_degree, jobs, *format, output_path);
        if (app.got_subcommand(crosscheck))
            return cmd_crosscheck(max_degree, jobs, *format, output_path);
        if (app.got_subcommand(families))
            return cmd_families(family_arg, max_degree, *format, output_path);
        if (app.got_subcommand(identify_cmd))
            return cmd_identify(pairs, degree_arg, *format, output_path);
    } catch (const cusp::BoundTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cusp::OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
