#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hwcone/classification.hpp"
#include "hwcone/json_io.hpp"
#include "hwcone/presentation.hpp"
#include "hwcone/selftest.hpp"

namespace hwcone::cli {

namespace detail {

inline std::vector<SimpleType> parse_type_spec(const std::string& spec) {
    std::vector<SimpleType> components;
    size_t pos = 0;
    while (pos < spec.size()) {
        const char letter = spec[pos++];
        size_t digits = pos;
        while (digits < spec.size() && std::isdigit(static_cast<unsigned char>(spec[digits]))) ++digits;
        if (digits == pos) throw std::invalid_argument("type '" + spec + "': missing rank after '" + letter + "'");
        const int rank = std::stoi(spec.substr(pos, digits - pos));
        components.push_back({family_from_letter(letter), rank});
        validate(components.back());
        pos = digits;
        if (pos < spec.size()) {
            if (spec[pos] != 'x') throw std::invalid_argument("type '" + spec + "': expected 'x' between components");
            ++pos;
            if (pos == spec.size()) throw std::invalid_argument("type '" + spec + "': trailing 'x'");
        }
    }
    if (components.empty()) throw std::invalid_argument("empty type spec");
    return components;
}

inline std::vector<int> parse_label_group(const std::string& group, const std::string& context) {
    std::vector<int> labels;
    std::stringstream ss(group);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            if (v < 0) throw std::invalid_argument(item);
            labels.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(context + ": label '" + item + "' is not a nonnegative integer");
        }
    }
    return labels;
}

/// Labels come in Bourbaki node order, comma-separated, with ':' between
/// product components: "1,0,0" or "1,0:1".
inline Weight parse_labels(const std::vector<SimpleType>& components, const std::string& text) {
    std::vector<std::string> groups;
    std::stringstream ss(text);
    std::string group;
    while (std::getline(ss, group, ':')) groups.push_back(group);
    std::string type_str;
    for (size_t i = 0; i < components.size(); ++i) type_str += (i ? "x" : "") + components[i].str();
    if (groups.size() != components.size())
        throw std::invalid_argument("type " + type_str + " expects " + std::to_string(components.size()) +
                                    " ':'-separated label groups, got " + std::to_string(groups.size()));
    Weight w;
    for (size_t i = 0; i < components.size(); ++i) {
        const auto labels = parse_label_group(groups[i], "component " + components[i].str());
        if (static_cast<int>(labels.size()) != components[i].rank)
            throw std::invalid_argument("component " + components[i].str() + " expects " +
                                        std::to_string(components[i].rank) + " comma-separated labels, got " +
                                        std::to_string(labels.size()));
        w.labels.insert(w.labels.end(), labels.begin(), labels.end());
    }
    return w;
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline void print_report_text(const ClassificationReport& rep, std::ostream& out) {
    out << "type             " << rep.type << "\n";
    out << "labels           " << rep.labels << "\n";
    out << "I_varpi          ";
    for (size_t i = 0; i < rep.I_varpi.size(); ++i) out << (i ? "," : "") << rep.I_varpi[i];
    if (rep.I_varpi.empty()) out << "-";
    out << "\n";
    out << "n                " << rep.n << "\n";
    out << "dimE             " << to_string(rep.dimE) << "\n";
    out << "condition_C      " << yes_no(rep.condition_C) << "\n";
    out << "condition_D      " << yes_no(rep.condition_D) << "\n";
    out << "singular         " << yes_no(rep.singular) << "\n";
    out << "ufd              " << yes_no(rep.ufd) << "\n";
    out << "quadric_count    " << to_string(rep.quadric_count) << "\n";
    out << "negative_answer  " << yes_no(rep.negative_answer) << "\n";
    out << "units_trivial    " << yes_no(rep.units_trivial) << "\n";
    out << "n3_candidate     " << yes_no(rep.n3_candidate) << "\n";
    out << "table_version    " << rep.table_version << "\n";
}

inline void print_reports_table(const std::vector<ClassificationReport>& reports, std::ostream& out) {
    out << "# condition-D table version: " << kConditionDTableVersion << "\n";
    out << std::left << std::setw(8) << "type" << std::setw(18) << "labels" << std::setw(6) << "n" << std::setw(12)
        << "dimE" << std::setw(4) << "C" << std::setw(4) << "D" << std::setw(10) << "singular" << std::setw(6)
        << "ufd" << std::setw(10) << "quadrics" << "negative_answer\n";
    for (const auto& rep : reports) {
        out << std::left << std::setw(8) << rep.type << std::setw(18) << rep.labels << std::setw(6) << rep.n
            << std::setw(12) << to_string(rep.dimE) << std::setw(4) << (rep.condition_C ? 1 : 0) << std::setw(4)
            << (rep.condition_D ? 1 : 0) << std::setw(10) << (rep.singular ? 1 : 0) << std::setw(6)
            << (rep.ufd ? 1 : 0) << std::setw(10) << to_string(rep.quadric_count) << yes_no(rep.negative_answer)
            << "\n";
    }
}

inline std::string human(const Polynomial<Rational>& p) {
    return p.str([](const std::string& n) { return human_var_name(n); });
}

inline void print_presentation_text(const ConePresentation& cp, std::ostream& out) {
    out << "ring      ";
    for (size_t i = 0; i < cp.ring->size(); ++i) out << (i ? ", " : "") << human_var_name(cp.ring->name(i));
    out << "\n";
    out << "relation  " << human(cp.relation) << "\n";
    out << "invariant " << human_var_name(cp.invariant_generator) << "\n";
    out << "derivations (" << cp.derivations.size() << "):\n";
    for (size_t d = 0; d < cp.derivations.size(); ++d) {
        out << "  " << cp.derivation_names[d] << ":";
        bool any = false;
        for (size_t v = 0; v < cp.ring->size(); ++v) {
            const auto& img = cp.derivations[d].image(v);
            if (img.is_zero()) continue;
            out << (any ? ", " : " ") << human_var_name(cp.ring->name(v)) << " -> " << human(img);
            any = true;
        }
        if (!any) out << " zero";
        out << "\n";
    }
}

inline void print_verification_text(const VerificationReport& report, std::ostream& out) {
    for (const auto& c : report.checks) {
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.witness.empty()) out << "  [" << c.witness << "]";
        out << "\n";
    }
    out << (report.all_passed ? "all checks passed" : "verification FAILED") << "\n";
}

}  // namespace detail

/// Entry point used by the binary and the tests. Returns the process exit
/// status: 0 success, 1 verification failure, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"highest-weight cones with commuting locally nilpotent derivations"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* classify_cmd = app.add_subcommand(
        "classify", "classify a (type, weight) pair; args: TYPE RANK LABELS or TYPESPEC LABELS");
    std::vector<std::string> classify_args;
    classify_cmd->add_option("args", classify_args, "TYPE RANK LABELS (e.g. D 3 1,0,0) or TYPESPEC LABELS (e.g. A2xA1 1,0:1)")
        ->expected(2, 3);
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* enumerate_cmd = app.add_subcommand("enumerate", "classify all fundamental weights up to a rank");
    int max_rank = 0;
    enumerate_cmd->add_option("--max-rank", max_rank, "largest rank to include")->required();
    enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* derive_cmd = app.add_subcommand("derive", "build and verify the explicit derivations; args: FAMILY ELL");
    std::string derive_family;
    int derive_ell = 0;
    derive_cmd->add_option("family", derive_family, "B or D")->required();
    derive_cmd->add_option("ell", derive_ell, "rank (>= 3 for D, >= 2 for B)")->required();
    derive_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "re-run the checks on an exported presentation");
    std::string verify_file;
    verify_cmd->add_option("file", verify_file, "presentation JSON file")->required();
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* selftest_cmd = app.add_subcommand("selftest", "run the randomized invariant suites");
    long long selftest_cases = 1000;
    selftest_cmd->add_option("--cases", selftest_cases, "cases per randomized suite")->check(CLI::PositiveNumber);

    try {
        std::vector<const char*> argv;
        argv.push_back("hwcone");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(classify_cmd)) {
            std::vector<SimpleType> components;
            std::string labels_text;
            if (classify_args.size() == 3) {
                if (classify_args[0].size() != 1)
                    throw std::invalid_argument("with an explicit rank, TYPE must be a single family letter");
                SimpleType t{family_from_letter(classify_args[0][0]), 0};
                try {
                    t.rank = std::stoi(classify_args[1]);
                } catch (const std::exception&) {
                    throw std::invalid_argument("rank '" + classify_args[1] + "' is not an integer");
                }
                validate(t);
                components = {t};
                labels_text = classify_args[2];
            } else {
                components = detail::parse_type_spec(classify_args[0]);
                labels_text = classify_args[1];
            }
            const Weight w = detail::parse_labels(components, labels_text);
            if (w.is_zero()) throw std::invalid_argument("zero weight: a nonzero dominant weight is required");
            const auto rep = classify(components, w);
            if (format == "json")
                out << to_json(rep).dump(2) << "\n";
            else
                detail::print_report_text(rep, out);
            return 0;
        }
        if (app.got_subcommand(enumerate_cmd)) {
            const auto reports = enumerate_fundamental(max_rank);
            if (format == "json")
                out << to_json(reports).dump(2) << "\n";
            else
                detail::print_reports_table(reports, out);
            return 0;
        }
        if (app.got_subcommand(derive_cmd)) {
            if (derive_family.size() != 1) throw std::invalid_argument("family must be B or D");
            const auto cp = build_example(family_from_letter(derive_family[0]), derive_ell);
            const auto report = verify_presentation(cp);
            if (format == "json") {
                Json j;
                j["presentation"] = to_json(cp);
                j["verification"] = to_json(report);
                out << j.dump(2) << "\n";
            } else {
                detail::print_presentation_text(cp, out);
                detail::print_verification_text(report, out);
            }
            return report.all_passed ? 0 : 1;
        }
        if (app.got_subcommand(verify_cmd)) {
            std::ifstream in(verify_file);
            if (!in) throw std::invalid_argument("cannot open " + verify_file);
            Json j;
            try {
                in >> j;
            } catch (const std::exception& e) {
                throw std::invalid_argument(verify_file + ": " + e.what());
            }
            const auto cp = presentation_from_json(j);
            const auto report = verify_presentation(cp);
            if (format == "json")
                out << to_json(report).dump(2) << "\n";
            else
                detail::print_verification_text(report, out);
            return report.all_passed ? 0 : 1;
        }
        if (app.got_subcommand(selftest_cmd)) {
            const auto seed = selftest::selftest_seed();
            out << "seed " << seed << ", " << selftest_cases << " cases per randomized suite\n";
            const auto results = selftest::run_all(seed, selftest_cases);
            bool all = true;
            for (const auto& r : results) {
                out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " (" << r.cases << " cases)";
                if (!r.detail.empty()) out << "  [" << r.detail << "]";
                out << "\n";
                all = all && r.passed;
            }
            out << (all ? "selftest passed" : "selftest FAILED") << "\n";
            return all ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace hwcone::cli
