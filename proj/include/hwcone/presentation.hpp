#pragma once

#include <string>
#include <vector>

#include "hwcone/derivation.hpp"
#include "hwcone/linalg.hpp"
#include "hwcone/polynomial.hpp"
#include "hwcone/root_system.hpp"

namespace hwcone {

/// Machine name of a signed-index variable: x1, x0, xm1 for x_{-1}.
inline std::string var_name(int j) { return j < 0 ? "xm" + std::to_string(-j) : "x" + std::to_string(j); }

/// Human rendering: xm1 -> x_{-1}, x2 -> x_2.
inline std::string human_var_name(const std::string& machine) {
    if (machine.size() >= 2 && machine[0] == 'x' && machine[1] == 'm') return "x_{-" + machine.substr(2) + "}";
    if (machine.size() >= 2 && machine[0] == 'x') return "x_" + machine.substr(1);
    return machine;
}

/// A quadric cone presentation: the coordinate ring of the cone is the
/// polynomial ring modulo the relation, together with derivations that
/// annihilate the relation exactly and fix the invariant generator.
struct ConePresentation {
    RingPtr ring;
    Polynomial<Rational> relation;
    std::vector<std::string> derivation_names;
    std::vector<Derivation<Rational>> derivations;
    std::string invariant_generator;

    /// dim of the cone: one more than the number of independent derivations,
    /// one less than the ambient variable count.
    int cone_dimension() const { return static_cast<int>(ring->size()) - 1; }
};

/// Builds the explicit cone of the vector representation: family D gives the
/// even quadric x_{-1}x_1 + ... + x_{-l}x_l in 2l variables (ell >= 3), family
/// B the odd quadric x_0^2 + x_{-1}x_1 + ... + x_{-l}x_l in 2l+1 variables
/// (ell >= 2). The derivations D_j lower x_j to x_1 and feed x_{-1} back into
/// x_{-j}; signs are fixed by D_j(relation) = 0.
inline ConePresentation build_example(Family family, int ell) {
    if (family != Family::B && family != Family::D)
        throw std::invalid_argument("explicit derivations exist for families B and D only");
    if (family == Family::D && ell < 3)
        throw std::invalid_argument("family D requires ell >= 3, got " + std::to_string(ell));
    if (family == Family::B && ell < 2)
        throw std::invalid_argument("family B requires ell >= 2, got " + std::to_string(ell));

    // variable order: x_1..x_l [, x_0], x_{-l}..x_{-1}
    std::vector<int> var_indices;
    for (int i = 1; i <= ell; ++i) var_indices.push_back(i);
    if (family == Family::B) var_indices.push_back(0);
    for (int i = -ell; i <= -1; ++i) var_indices.push_back(i);

    std::vector<std::string> names;
    for (int j : var_indices) names.push_back(var_name(j));
    const RingPtr ring = make_ring(names);

    auto index_of = [&](int j) {
        for (size_t k = 0; k < var_indices.size(); ++k)
            if (var_indices[k] == j) return k;
        throw std::logic_error("variable index lookup failed");
    };
    auto x = [&](int j) { return Polynomial<Rational>::variable(ring, index_of(j)); };

    Polynomial<Rational> relation(ring);
    for (int i = 1; i <= ell; ++i) relation += x(-i) * x(i);
    if (family == Family::B) relation += x(0) * x(0);

    std::vector<int> js;
    for (int j = 2; j <= ell; ++j) js.push_back(j);
    if (family == Family::B) js.push_back(0);
    for (int j = -ell; j <= -2; ++j) js.push_back(j);

    ConePresentation cp{ring, relation, {}, {}, var_name(1)};
    for (int j : js) {
        std::vector<Polynomial<Rational>> images(ring->size(), Polynomial<Rational>::zero(ring));
        if (j == 0) {
            // D_0(x_0) = +x_1 would give D_0(h) = 4 x_0 x_1; this sign keeps
            // the quadric invariant with D_0(x_{-1}) = 2 x_0
            images[index_of(0)] = -x(1);
            images[index_of(-1)] = x(0).scaled(2);
        } else {
            images[index_of(j)] = x(1);
            images[index_of(-1)] = -x(-j);
        }
        cp.derivation_names.push_back("D_" + std::to_string(j));
        cp.derivations.emplace_back(ring, std::move(images));
    }
    return cp;
}

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string witness;  // empty on pass; the violating polynomial or reason otherwise
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_passed = false;
};

namespace detail {

inline std::string human_poly(const Polynomial<Rational>& p) {
    return p.str([](const std::string& n) { return human_var_name(n); });
}

}  // namespace detail

/// Runs the six certification checks on a presentation:
///  1. every derivation annihilates the relation exactly,
///  2. all pairwise commutators vanish,
///  3. every derivation is locally nilpotent (bound = variable count),
///  4. the derivations are linearly independent over the cone's coordinate
///     ring, certified by full rank of the image matrix at the cone point
///     e_1 (rank there bounds rank over the fraction field from below),
///  5. every derivation kills the invariant generator,
///  6. the truncated exponential flow of each derivation fixes the relation
///     exactly (symbolic flow parameter; truncation is exact by nilpotency).
inline VerificationReport verify_presentation(const ConePresentation& cp) {
    VerificationReport report;
    const size_t nvars = cp.ring->size();
    const size_t nder = cp.derivations.size();

    {
        VerificationCheck c{"annihilates_relation", true, ""};
        for (size_t j = 0; j < nder; ++j) {
            const auto image = cp.derivations[j].apply(cp.relation);
            if (!image.is_zero()) {
                c.passed = false;
                c.witness = cp.derivation_names[j] + "(relation) = " + detail::human_poly(image);
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }
    {
        VerificationCheck c{"pairwise_commute", true, ""};
        for (size_t a = 0; a < nder && c.passed; ++a)
            for (size_t b = a + 1; b < nder && c.passed; ++b) {
                const auto bracket = commutator(cp.derivations[a], cp.derivations[b]);
                if (!bracket.is_zero()) {
                    c.passed = false;
                    for (size_t v = 0; v < nvars; ++v)
                        if (!bracket.image(v).is_zero()) {
                            c.witness = "[" + cp.derivation_names[a] + "," + cp.derivation_names[b] + "](" +
                                        human_var_name(cp.ring->name(v)) + ") = " + detail::human_poly(bracket.image(v));
                            break;
                        }
                }
            }
        report.checks.push_back(std::move(c));
    }
    {
        VerificationCheck c{"locally_nilpotent", true, ""};
        for (size_t j = 0; j < nder; ++j)
            if (is_locally_nilpotent(cp.derivations[j], static_cast<int>(nvars)) != Nilpotency::verified) {
                c.passed = false;
                c.witness = cp.derivation_names[j] + " not verified nilpotent within bound " + std::to_string(nvars);
                break;
            }
        report.checks.push_back(std::move(c));
    }
    {
        VerificationCheck c{"linearly_independent", true, ""};
        const auto gen = cp.ring->index(cp.invariant_generator);
        std::vector<Rational> e1(nvars, 0);
        if (gen) e1[*gen] = 1;
        linalg::Matrix m(nder, std::vector<Rational>(nvars));
        for (size_t j = 0; j < nder; ++j)
            for (size_t v = 0; v < nvars; ++v) m[j][v] = cp.derivations[j].image(v).evaluate(e1);
        const int expected = cp.cone_dimension() - 1;
        const int r = linalg::rank(m);
        if (!gen) {
            c.passed = false;
            c.witness = "invariant generator " + cp.invariant_generator + " is not a ring variable";
        } else if (static_cast<int>(nder) != expected) {
            c.passed = false;
            c.witness = "expected " + std::to_string(expected) + " derivations, got " + std::to_string(nder);
        } else if (r != expected) {
            c.passed = false;
            c.witness = "image matrix at e_1 has rank " + std::to_string(r) + ", expected " + std::to_string(expected);
        }
        report.checks.push_back(std::move(c));
    }
    {
        VerificationCheck c{"kernel_contains_invariant", true, ""};
        const auto gen = cp.ring->index(cp.invariant_generator);
        for (size_t j = 0; gen && j < nder; ++j)
            if (!cp.derivations[j].image(*gen).is_zero()) {
                c.passed = false;
                c.witness = cp.derivation_names[j] + "(" + human_var_name(cp.invariant_generator) +
                            ") = " + detail::human_poly(cp.derivations[j].image(*gen));
                break;
            }
        if (!gen) {
            c.passed = false;
            c.witness = "invariant generator " + cp.invariant_generator + " is not a ring variable";
        }
        report.checks.push_back(std::move(c));
    }
    {
        VerificationCheck c{"flow_preserves_relation", true, ""};
        std::string t_name = "t";
        while (cp.ring->index(t_name)) t_name += "_";
        for (size_t j = 0; j < nder; ++j) {
            const auto [ext, flow] = exp_flow(cp.derivations[j], t_name, static_cast<int>(nvars));
            const auto moved = cp.relation.substitute(flow);
            const auto fixed = embed(cp.relation, ext);
            if (moved != fixed) {
                c.passed = false;
                c.witness = "exp(t " + cp.derivation_names[j] +
                            ")(relation) - relation = " + detail::human_poly(moved - fixed);
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }

    report.all_passed = true;
    for (const auto& c : report.checks) report.all_passed = report.all_passed && c.passed;
    return report;
}

/// Gram matrix of the degree-2 part of a polynomial: G[i][j] is half the
/// coefficient of x_i x_j off the diagonal, the coefficient of x_i^2 on it.
inline linalg::Matrix gram_matrix(const Polynomial<Rational>& q) {
    const size_t n = q.ring()->size();
    linalg::Matrix g(n, std::vector<Rational>(n, 0));
    for (const auto& [e, c] : q.terms()) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg != 2) continue;
        int i = -1, j = -1;
        for (size_t v = 0; v < n; ++v) {
            if (e[v] == 2) i = j = static_cast<int>(v);
            if (e[v] == 1) (i < 0 ? i : j) = static_cast<int>(v);
        }
        if (i == j)
            g[i][i] = c;
        else {
            g[i][j] = c / 2;
            g[j][i] = c / 2;
        }
    }
    return g;
}

/// A quadratic form splits into two linear factors only if its Gram matrix
/// has rank at most 2, so rank >= 3 certifies irreducibility.
inline bool quadric_is_irreducible(const Polynomial<Rational>& q) { return linalg::rank(gram_matrix(q)) >= 3; }

}  // namespace hwcone
