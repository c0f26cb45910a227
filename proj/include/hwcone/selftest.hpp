#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "hwcone/classification.hpp"
#include "hwcone/presentation.hpp"

namespace hwcone::selftest {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    bool passed = false;
    std::string detail;  // first failure, when any
};

inline unsigned long long selftest_seed() {
    if (const char* env = std::getenv("SELFTEST_SEED")) return std::strtoull(env, nullptr, 10);
    return 0x5eed5eedull;
}

namespace detail {

using Poly = Polynomial<Rational>;
using Deriv = Derivation<Rational>;

inline Poly random_poly(const RingPtr& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> numer(-9, 9);
    std::uniform_int_distribution<int> denom(1, 9);
    Poly p(ring);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(ring->size());
        for (auto& x : e) x = expo(rng);
        p.add_term(std::move(e), Rational(numer(rng), denom(rng)));
    }
    return p;
}

inline Deriv random_linear_derivation(const RingPtr& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Poly> images;
    for (size_t i = 0; i < ring->size(); ++i) {
        Poly img(ring);
        for (size_t v = 0; v < ring->size(); ++v) {
            Exponents e(ring->size(), 0);
            e[v] = 1;
            img.add_term(std::move(e), coeff(rng));
        }
        images.push_back(std::move(img));
    }
    return Deriv(ring, std::move(images));
}

inline ConePresentation random_example(std::mt19937_64& rng, int max_ell = 5) {
    std::uniform_int_distribution<int> pick_family(0, 1);
    if (pick_family(rng) == 0) {
        std::uniform_int_distribution<int> ell(3, max_ell);
        return build_example(Family::D, ell(rng));
    }
    std::uniform_int_distribution<int> ell(2, max_ell);
    return build_example(Family::B, ell(rng));
}

}  // namespace detail

/// d(pq) = d(p)q + p d(q), exact, on random polynomials and derivations.
inline SuiteResult leibniz_rule(unsigned long long seed, long long cases) {
    std::mt19937_64 rng(seed ^ 0x1eafull);
    const RingPtr ring = make_ring({"u", "v", "w"});
    SuiteResult res{"leibniz_rule", cases, true, ""};
    for (long long i = 0; i < cases; ++i) {
        const auto d = detail::random_linear_derivation(ring, rng);
        const auto p = detail::random_poly(ring, rng);
        const auto q = detail::random_poly(ring, rng);
        if (d.apply(p * q) != d.apply(p) * q + p * d.apply(q)) {
            res.passed = false;
            res.detail = "case " + std::to_string(i) + ": p = " + p.str() + ", q = " + q.str();
            break;
        }
    }
    return res;
}

/// [d1, d2] = -[d2, d1] on random linear derivations.
inline SuiteResult commutator_antisymmetry(unsigned long long seed, long long cases) {
    std::mt19937_64 rng(seed ^ 0xa5eull);
    const RingPtr ring = make_ring({"u", "v", "w", "z"});
    SuiteResult res{"commutator_antisymmetry", cases, true, ""};
    for (long long i = 0; i < cases; ++i) {
        const auto a = detail::random_linear_derivation(ring, rng);
        const auto b = detail::random_linear_derivation(ring, rng);
        const auto ab = commutator(a, b), ba = commutator(b, a);
        for (size_t v = 0; v < ring->size(); ++v)
            if (ab.image(v) != -ba.image(v)) {
                res.passed = false;
                res.detail = "case " + std::to_string(i);
                break;
            }
        if (!res.passed) break;
    }
    return res;
}

/// exp(tD) exp(sD) = exp((t+s)D) on every variable, in the ring extended by
/// symbolic s and t, for the derivations of the explicit examples.
inline SuiteResult exp_flow_composition(unsigned long long seed, long long cases) {
    std::mt19937_64 rng(seed ^ 0xf10ull);
    SuiteResult res{"exp_flow_composition", cases, true, ""};
    for (long long i = 0; i < cases && res.passed; ++i) {
        const auto cp = detail::random_example(rng);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(cp.derivations.size()) - 1);
        const auto& d = cp.derivations[pick(rng)];
        const size_t nv = cp.ring->size();

        const auto [ring_t, flow_t] = exp_flow(d, "t", static_cast<int>(nv));
        const auto ring_ts = extend_ring(ring_t, {"s"});
        const auto [ring_s, flow_s] = exp_flow(d, "s", static_cast<int>(nv));

        std::vector<detail::Poly> compose;
        for (const auto& img : flow_s) {
            detail::Poly out(ring_ts);
            for (const auto& [e, c] : img.terms()) {
                Exponents ext(e.begin(), e.end() - 1);
                ext.push_back(0);
                ext.push_back(e.back());
                out.add_term(std::move(ext), c);
            }
            compose.push_back(std::move(out));
        }
        compose.push_back(detail::Poly::variable(ring_ts, nv));  // t -> t

        std::vector<detail::Poly> shift;
        for (size_t v = 0; v < nv; ++v) shift.push_back(detail::Poly::variable(ring_ts, v));
        shift.push_back(detail::Poly::variable(ring_ts, nv) + detail::Poly::variable(ring_ts, nv + 1));

        for (size_t v = 0; v < nv && res.passed; ++v)
            if (flow_t[v].substitute(compose) != flow_t[v].substitute(shift)) {
                res.passed = false;
                res.detail = "case " + std::to_string(i) + ": variable " + cp.ring->name(v);
            }
    }
    return res;
}

/// The quadric is fixed by the flow at random rational times: substituting
/// x_i -> x_i + t0 D(x_i) + t0^2/2 D^2(x_i) into the relation reproduces it.
inline SuiteResult flow_invariance(unsigned long long seed, long long cases) {
    std::mt19937_64 rng(seed ^ 0xf1a9ull);
    SuiteResult res{"flow_invariance", cases, true, ""};
    std::uniform_int_distribution<int> numer(-20, 20);
    std::uniform_int_distribution<int> denom(1, 20);
    for (long long i = 0; i < cases && res.passed; ++i) {
        const auto cp = detail::random_example(rng);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(cp.derivations.size()) - 1);
        const auto& d = cp.derivations[pick(rng)];
        const Rational t0(numer(rng), denom(rng));

        std::vector<detail::Poly> images;
        for (size_t v = 0; v < cp.ring->size(); ++v) {
            detail::Poly acc = detail::Poly::variable(cp.ring, v);
            detail::Poly term = acc;
            Rational t_power(1), factorial(1);
            for (int k = 1; k <= 3; ++k) {
                term = d.apply(term);
                if (term.is_zero()) break;
                t_power *= t0;
                factorial *= Rational(k);
                acc += term.scaled(t_power / factorial);
            }
            images.push_back(std::move(acc));
        }
        if (cp.relation.substitute(images) != cp.relation) {
            res.passed = false;
            res.detail = "case " + std::to_string(i) + " at t = " + to_string(t0);
        }
    }
    return res;
}

/// Randomized sign flips in derivation images are caught by verification
/// with a nonzero witness.
inline SuiteResult mutation_detection(unsigned long long seed, long long cases) {
    std::mt19937_64 rng(seed ^ 0xdeadull);
    SuiteResult res{"mutation_detection", cases, true, ""};
    for (long long i = 0; i < cases && res.passed; ++i) {
        auto cp = detail::random_example(rng, 4);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(cp.derivations.size()) - 1);
        const int which = pick(rng);

        std::vector<detail::Poly> images = cp.derivations[which].images();
        std::vector<size_t> nonzero;
        for (size_t v = 0; v < images.size(); ++v)
            if (!images[v].is_zero()) nonzero.push_back(v);
        std::uniform_int_distribution<size_t> pick_var(0, nonzero.size() - 1);
        const size_t v = nonzero[pick_var(rng)];
        images[v] = -images[v];
        cp.derivations[which] = detail::Deriv(cp.ring, std::move(images));

        const auto report = verify_presentation(cp);
        bool witnessed = false;
        for (const auto& check : report.checks)
            if (!check.passed && !check.witness.empty()) witnessed = true;
        if (report.all_passed || !witnessed) {
            res.passed = false;
            res.detail = "case " + std::to_string(i) + ": mutation in " + cp.derivation_names[which] +
                         " escaped verification";
        }
    }
    return res;
}

/// (C) <=> (D) over all simple types up to max_rank, fundamental weights plus
/// random dominant weights.
inline SuiteResult condition_equivalence(unsigned long long seed, int max_rank, long long random_per_type) {
    std::mt19937_64 rng(seed ^ 0xcdull);
    SuiteResult res{"condition_C_equals_condition_D", 0, true, ""};
    std::uniform_int_distribution<int> label(0, 3);
    for (const auto& t : simple_types_up_to(max_rank)) {
        const auto rs = RootSystem::build(t);
        std::vector<Weight> weights;
        for (int k = 1; k <= t.rank; ++k) weights.push_back(fundamental_weight(t.rank, k));
        for (long long i = 0; i < random_per_type; ++i) {
            Weight w{std::vector<int>(t.rank)};
            do
                for (int& m : w.labels) m = label(rng);
            while (w.is_zero());
            weights.push_back(std::move(w));
        }
        for (const auto& w : weights) {
            ++res.cases;
            const bool c = condition_C(rs, stabilizer_index_set(rs, w));
            const bool d = condition_D(t, w);
            if (c != d) {
                res.passed = false;
                res.detail = t.str() + " labels " + format_labels({t}, w);
                return res;
            }
        }
    }
    return res;
}

/// Verification suite over the full ell range, with derivation counts matched
/// against the classification's cone dimension.
inline SuiteResult presentations_verify(int max_ell = 8) {
    SuiteResult res{"presentations_verify", 0, true, ""};
    auto run = [&](Family fam, int ell) {
        if (!res.passed) return;
        ++res.cases;
        const auto cp = build_example(fam, ell);
        const auto report = verify_presentation(cp);
        const auto rep = classify(SimpleType{fam, ell}, fundamental_weight(ell, 1));
        if (!report.all_passed || static_cast<long long>(cp.derivations.size()) != rep.n - 1) {
            res.passed = false;
            res.detail = std::string(1, family_letter(fam)) + std::to_string(ell);
        }
    };
    for (int ell = 3; ell <= max_ell; ++ell) run(Family::D, ell);
    for (int ell = 2; ell <= max_ell; ++ell) run(Family::B, ell);
    return res;
}

/// The full invariant suite behind the selftest verb.
inline std::vector<SuiteResult> run_all(unsigned long long seed, long long cases = 1000) {
    return {
        condition_equivalence(seed, max_rank_cap(), 100),
        presentations_verify(),
        leibniz_rule(seed, cases),
        commutator_antisymmetry(seed, cases),
        exp_flow_composition(seed, cases),
        flow_invariance(seed, cases),
        mutation_detection(seed, std::max(1ll, cases / 10)),
    };
}

}  // namespace hwcone::selftest
