// Acceptance suite: one pass/fail line per criterion, exit status = number of
// failed criteria. Criteria 2 and 3 go through the real CLI surface.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hwcone/cli.hpp"
#include "hwcone/classification.hpp"
#include "hwcone/json_io.hpp"
#include "hwcone/presentation.hpp"
#include "hwcone/selftest.hpp"
#include "support/freudenthal.hpp"

using namespace hwcone;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<std::string()>& body) {
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const bool ok = detail.empty();
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title;
    if (!ok) std::cout << " -- " << detail;
    std::cout << std::endl;
}

Json cli_json(const std::vector<std::string>& args, int expected_status) {
    std::ostringstream out, err;
    std::vector<std::string> with_format(args);
    with_format.push_back("--format");
    with_format.push_back("json");
    const int status = cli::run(with_format, out, err);
    if (status != expected_status)
        throw std::runtime_error("command exited " + std::to_string(status) + ", expected " +
                                 std::to_string(expected_status) + ": " + err.str());
    return Json::parse(out.str());
}

std::string check_flags(const Json& rep, long long n, const std::string& dimE, bool singular, bool ufd,
                        bool negative) {
    if (rep["n"].get<long long>() != n) return "n = " + rep["n"].dump() + ", expected " + std::to_string(n);
    if (rep["dimE"].get<std::string>() != dimE) return "dimE = " + rep["dimE"].dump() + ", expected " + dimE;
    if (rep["singular"].get<bool>() != singular) return "singular flag wrong";
    if (rep["ufd"].get<bool>() != ufd) return "ufd flag wrong";
    if (rep["negative_answer"].get<bool>() != negative) return "negative_answer flag wrong";
    return "";
}

std::string all_six_pass(const Json& verification) {
    if (verification["checks"].size() != 6) return "expected six checks";
    for (const auto& c : verification["checks"])
        if (!c["passed"].get<bool>()) return "check " + c["name"].get<std::string>() + " failed";
    if (!verification["all_passed"].get<bool>()) return "all_passed not set";
    return "";
}

}  // namespace

int main() {
    criterion(1, "condition (C) = condition (D) for every simple type of rank <= 8, "
                 "fundamental plus 100 random dominant weights per type", [] {
        std::mt19937_64 rng(0x1717u);
        std::uniform_int_distribution<int> label(0, 4);
        long long cases = 0;
        for (const auto& t : simple_types_up_to(8)) {
            const auto rs = RootSystem::build(t);
            std::vector<Weight> weights;
            for (int k = 1; k <= t.rank; ++k) weights.push_back(fundamental_weight(t.rank, k));
            for (int i = 0; i < 100; ++i) {
                Weight w{std::vector<int>(t.rank)};
                do
                    for (int& m : w.labels) m = label(rng);
                while (w.is_zero());
                weights.push_back(std::move(w));
            }
            for (const auto& w : weights) {
                ++cases;
                if (condition_C(rs, stabilizer_index_set(rs, w)) != condition_D(t, w))
                    return t.str() + " labels " + format_labels({t}, w) + " disagree (" + std::to_string(cases) +
                           " cases checked)";
            }
        }
        return std::string();
    });

    criterion(2, "classify D 3 1,0,0 reproduces the even quadric cone and derive D 3 verifies", [] {
        const Json rep = cli_json({"classify", "D", "3", "1,0,0"}, 0);
        std::string bad = check_flags(rep, 5, "6", true, true, true);
        if (!bad.empty()) return bad;
        const Json derived = cli_json({"derive", "D", "3"}, 0);
        return all_six_pass(derived["verification"]);
    });

    criterion(3, "classify B 2 1,0 reproduces the odd quadric cone and derive B 2 verifies "
                 "with D_0(h) = 0 and D_0(x_{-1}) = 2x_0", [] {
        const Json rep = cli_json({"classify", "B", "2", "1,0"}, 0);
        std::string bad = check_flags(rep, 4, "5", true, true, true);
        if (!bad.empty()) return bad;
        const Json derived = cli_json({"derive", "B", "2"}, 0);
        bad = all_six_pass(derived["verification"]);
        if (!bad.empty()) return bad;

        const auto cp = build_example(Family::B, 2);
        const auto d0 = std::find(cp.derivation_names.begin(), cp.derivation_names.end(), "D_0");
        if (d0 == cp.derivation_names.end()) return std::string("no D_0");
        const auto& D0 = cp.derivations[d0 - cp.derivation_names.begin()];
        if (!D0.apply(cp.relation).is_zero()) return std::string("D_0(h) != 0");
        const auto xm1 = Polynomial<Rational>::variable(cp.ring, "xm1");
        const auto x0 = Polynomial<Rational>::variable(cp.ring, "x0");
        if (D0.apply(xm1) != x0.scaled(2)) return std::string("D_0(x_{-1}) != 2x_0");
        return std::string();
    });

    criterion(4, "dimension identities: dim E = 2l with n = 2l-1 for D_l, dim E = 2l+1 with n = 2l for B_l", [] {
        for (int l = 3; l <= 8; ++l) {
            const auto rep = classify(SimpleType{Family::D, l}, fundamental_weight(l, 1));
            if (rep.dimE != 2 * l || rep.n != 2 * l - 1) return "D" + std::to_string(l);
        }
        for (int l = 2; l <= 8; ++l) {
            const auto rep = classify(SimpleType{Family::B, l}, fundamental_weight(l, 1));
            if (rep.dimE != 2 * l + 1 || rep.n != 2 * l) return "B" + std::to_string(l);
        }
        return std::string();
    });

    criterion(5, "single quadric for every vector cone, with dim E(2w) cross-checked by Freudenthal", [] {
        for (int l = 3; l <= 8; ++l)
            if (quadric_count(RootSystem::build({Family::D, l}), fundamental_weight(l, 1)) != 1)
                return "D" + std::to_string(l);
        for (int l = 2; l <= 8; ++l)
            if (quadric_count(RootSystem::build({Family::B, l}), fundamental_weight(l, 1)) != 1)
                return "B" + std::to_string(l);
        for (const auto& t : {SimpleType{Family::D, 3}, SimpleType{Family::D, 4}, SimpleType{Family::B, 2},
                              SimpleType{Family::B, 3}, SimpleType{Family::B, 4}}) {
            const auto rs = RootSystem::build(t);
            const auto twice = doubled(fundamental_weight(t.rank, 1));
            if (rs.irrep_dimension(twice) != oracle::freudenthal_dimension(rs, twice))
                return t.str() + ": Weyl and Freudenthal disagree on dim E(2w)";
        }
        return std::string();
    });

    criterion(6, "rank-8 sweep: no E8/F4/G2 fundamental satisfies (D); dim E = n forces negative_answer = false", [] {
        for (const auto& rep : enumerate_fundamental(8)) {
            const bool excluded = rep.type == "E8" || rep.type == "F4" || rep.type == "G2";
            if (excluded && rep.condition_D) return rep.type + " " + rep.labels + " has condition_D = true";
            if (rep.dimE == rep.n && rep.negative_answer)
                return rep.type + " " + rep.labels + " is a nonsingular negative answer";
            if (rep.dimE == rep.n && rep.singular) return rep.type + " " + rep.labels + " singularity flag wrong";
        }
        return std::string();
    });

    criterion(7, "property suites: Leibniz, antisymmetry, exp-flow composition, flow invariance "
                 "(1000 exact cases each) and mutation detection, within 60 seconds", [] {
        const auto start = std::chrono::steady_clock::now();
        const auto seed = selftest::selftest_seed();
        for (const auto& suite : {selftest::leibniz_rule(seed, 1000), selftest::commutator_antisymmetry(seed, 1000),
                                  selftest::exp_flow_composition(seed, 1000), selftest::flow_invariance(seed, 1000),
                                  selftest::mutation_detection(seed, 200)}) {
            if (!suite.passed) return suite.name + ": " + suite.detail;
        }
        std::ostringstream sink;
        if (cli::run({"selftest"}, sink, sink) != 0) return std::string("selftest verb failed");
        const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
        if (elapsed.count() > 60) return "took " + std::to_string(elapsed.count()) + "s";
        return std::string();
    });

    std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
    return failures;
}
