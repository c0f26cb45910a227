#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "hwcone/classification.hpp"
#include "hwcone/presentation.hpp"

namespace hwcone {

// All machine output uses ordered_json: field order is fixed by insertion and
// term order by the polynomial's canonical graded-lex maps, so dumps are
// byte-stable across runs.
using Json = nlohmann::ordered_json;

inline Json to_json(const ClassificationReport& rep) {
    Json j;
    j["type"] = rep.type;
    j["labels"] = rep.labels;
    j["I_varpi"] = rep.I_varpi;
    j["n"] = rep.n;
    j["dimE"] = to_string(rep.dimE);
    j["condition_C"] = rep.condition_C;
    j["condition_D"] = rep.condition_D;
    j["singular"] = rep.singular;
    j["ufd"] = rep.ufd;
    j["quadric_count"] = to_string(rep.quadric_count);
    j["negative_answer"] = rep.negative_answer;
    j["units_trivial"] = rep.units_trivial;
    j["n3_candidate"] = rep.n3_candidate;
    j["table_version"] = rep.table_version;
    return j;
}

inline Json to_json(const std::vector<ClassificationReport>& reports) {
    Json j = Json::array();
    for (const auto& rep : reports) j.push_back(to_json(rep));
    return j;
}

inline Json terms_to_json(const Polynomial<Rational>& p) {
    Json list = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["exp"] = e;
        term["num"] = to_string(num(c));
        term["den"] = to_string(den(c));
        list.push_back(std::move(term));
    }
    return list;
}

inline Polynomial<Rational> terms_from_json(const Json& list, const RingPtr& ring) {
    if (!list.is_array()) throw std::invalid_argument("term list must be an array");
    Polynomial<Rational> p(ring);
    for (const auto& term : list) {
        if (!term.contains("exp") || !term.contains("num") || !term.contains("den"))
            throw std::invalid_argument("term needs exp/num/den fields");
        Exponents e = term["exp"].get<Exponents>();
        if (e.size() != ring->size()) throw std::invalid_argument("term exponent arity mismatch");
        for (int x : e)
            if (x < 0) throw std::invalid_argument("negative exponent");
        BigInt n, d;
        try {
            n = bigint_from_string(term["num"].get<std::string>());
            d = bigint_from_string(term["den"].get<std::string>());
        } catch (const std::runtime_error& ex) {
            throw std::invalid_argument(std::string("bad coefficient: ") + ex.what());
        }
        if (d == 0) throw std::invalid_argument("zero denominator");
        if (d < 0) {  // cpp_rational insists on a positive denominator
            d = -d;
            n = -n;
        }
        p.add_term(std::move(e), Rational(n, d));
    }
    return p;
}

inline Json to_json(const ConePresentation& cp) {
    Json j;
    j["ring"] = cp.ring->names();
    j["relation"] = terms_to_json(cp.relation);
    Json derivations = Json::array();
    for (size_t i = 0; i < cp.derivations.size(); ++i) {
        Json d;
        d["name"] = cp.derivation_names[i];
        Json images = Json::array();
        for (const auto& img : cp.derivations[i].images()) images.push_back(terms_to_json(img));
        d["images"] = std::move(images);
        derivations.push_back(std::move(d));
    }
    j["derivations"] = std::move(derivations);
    j["invariant_generator"] = cp.invariant_generator;
    return j;
}

inline ConePresentation presentation_from_json(const Json& in) {
    const Json& j = in.contains("presentation") ? in["presentation"] : in;
    for (const char* field : {"ring", "relation", "derivations", "invariant_generator"})
        if (!j.contains(field)) throw std::invalid_argument(std::string("presentation is missing field ") + field);

    const auto names = j["ring"].get<std::vector<std::string>>();
    if (names.empty()) throw std::invalid_argument("empty ring");
    const RingPtr ring = make_ring(names);

    ConePresentation cp{ring, terms_from_json(j["relation"], ring), {}, {}, j["invariant_generator"].get<std::string>()};
    if (!ring->index(cp.invariant_generator))
        throw std::invalid_argument("invariant_generator " + cp.invariant_generator + " is not a ring variable");

    for (const auto& d : j["derivations"]) {
        if (!d.contains("name") || !d.contains("images")) throw std::invalid_argument("derivation needs name/images");
        if (d["images"].size() != ring->size())
            throw std::invalid_argument("derivation " + d["name"].get<std::string>() + " needs one image per variable");
        std::vector<Polynomial<Rational>> images;
        for (const auto& img : d["images"]) images.push_back(terms_from_json(img, ring));
        cp.derivation_names.push_back(d["name"].get<std::string>());
        cp.derivations.emplace_back(ring, std::move(images));
    }
    return cp;
}

inline Json to_json(const VerificationReport& report) {
    Json j;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json check;
        check["name"] = c.name;
        check["passed"] = c.passed;
        check["witness"] = c.witness;
        checks.push_back(std::move(check));
    }
    j["checks"] = std::move(checks);
    j["all_passed"] = report.all_passed;
    return j;
}

}  // namespace hwcone
