#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwcone/root_system.hpp"

namespace hwcone {

// Version tag of the node-coloring table behind condition (D); stamped into
// every report so table edits stay traceable.
inline constexpr const char* kConditionDTableVersion = "cominuscule-v1";

/// The standard parabolic attached to a weight: I = zero-label nodes,
/// Phi_I = roots supported on I, and the complement Phi+ \ Phi_I whose size
/// is dim U_I^-.
struct ParabolicData {
    std::vector<int> I;  // 1-based node indices
    std::vector<Root> phi_I_positive;
    std::vector<Root> complement;
    int u_minus_dim = 0;
};

inline ParabolicData stabilizer_index_set(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.labels.size()) != rs.rank())
        throw std::invalid_argument("weight arity does not match root system rank");
    if (w.is_zero()) throw std::invalid_argument("nonzero weight required");
    ParabolicData pd;
    std::vector<bool> in_I(rs.rank(), false);
    for (int i = 0; i < rs.rank(); ++i)
        if (w.labels[i] == 0) {
            in_I[i] = true;
            pd.I.push_back(i + 1);
        }
    for (const Root& alpha : rs.positive_roots()) {
        bool supported = true;
        for (int i = 0; i < rs.rank(); ++i)
            if (alpha.coords[i] != 0 && !in_I[i]) {
                supported = false;
                break;
            }
        (supported ? pd.phi_I_positive : pd.complement).push_back(alpha);
    }
    pd.u_minus_dim = static_cast<int>(pd.complement.size());
    return pd;
}

/// Condition (C): U_I^- is commutative, i.e. no two complement roots sum to a
/// root (higher brackets need the pairwise sum first, by string contiguity).
inline bool condition_C(const RootSystem& rs, const ParabolicData& pd) {
    const size_t k = pd.complement.size();
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b)
            if (rs.is_sum_root(pd.complement[a], pd.complement[b])) return false;
    return true;
}

/// Nodes whose fundamental weight admits a commutative U^-: exactly the nodes
/// colored black in the classification table, per family in Bourbaki
/// numbering. E8, F4, G2 have none.
inline bool node_allows_abelian_radical(const SimpleType& t, int node) {
    const int l = t.rank;
    switch (t.family) {
        case Family::A: return true;
        case Family::B: return node == 1;
        case Family::C: return node == l;
        case Family::D: return node == 1 || node == l - 1 || node == l;
        case Family::E:
            if (l == 6) return node == 1 || node == 6;
            if (l == 7) return node == 7;
            return false;
        case Family::F:
        case Family::G: return false;
    }
    return false;
}

/// Condition (D): per connected component, at most one node carries a nonzero
/// label, and that node must be black in the table. Label magnitude is
/// irrelevant, only the node position matters.
inline bool condition_D(const std::vector<SimpleType>& components, const Weight& w) {
    size_t off = 0;
    for (const SimpleType& t : components) {
        int nonzero_node = 0, count = 0;
        for (int i = 0; i < t.rank; ++i)
            if (w.labels[off + i] != 0) {
                ++count;
                nonzero_node = i + 1;
            }
        if (count > 1) return false;
        if (count == 1 && !node_allows_abelian_radical(t, nonzero_node)) return false;
        off += t.rank;
    }
    return true;
}

inline bool condition_D(const SimpleType& type, const Weight& w) {
    return condition_D(std::vector<SimpleType>{type}, w);
}

/// Number of homogeneous quadrics cutting out X(w) in E(w):
/// dim E(w)(dim E(w)+1)/2 - dim E(2w).
inline BigInt quadric_count(const RootSystem& rs, const Weight& w) {
    if (w.is_zero()) throw std::invalid_argument("nonzero weight required");
    const BigInt d = rs.irrep_dimension(w);
    const BigInt count = d * (d + 1) / 2 - rs.irrep_dimension(doubled(w));
    if (count < 0) throw std::logic_error("quadric_count: negative value");
    return count;
}

/// Every verdict derived for one (type, weight) pair. units_trivial records
/// A(w)* = k*, which holds for every nonzero w and is not computed.
/// negative_answer claims a counterexample pair (A, D) only in dimension
/// n >= 4; an n = 3 hit is flagged separately instead (dimension-3 examples
/// exist but arise from a different construction).
struct ClassificationReport {
    std::string type;
    std::string labels;
    std::vector<int> I_varpi;  // 1-based
    long long n = 0;
    BigInt dimE;
    bool condition_C = false;
    bool condition_D = false;
    bool singular = false;
    bool ufd = false;
    BigInt quadric_count;
    bool negative_answer = false;
    bool units_trivial = true;
    bool n3_candidate = false;
    std::string table_version = kConditionDTableVersion;
};

inline std::string format_labels(const std::vector<SimpleType>& components, const Weight& w) {
    std::string s;
    size_t off = 0;
    for (size_t c = 0; c < components.size(); ++c) {
        if (c) s += ':';
        for (int i = 0; i < components[c].rank; ++i) {
            if (i) s += ',';
            s += std::to_string(w.labels[off + i]);
        }
        off += components[c].rank;
    }
    return s;
}

inline ClassificationReport classify(const RootSystem& rs, const Weight& w) {
    const ParabolicData pd = stabilizer_index_set(rs, w);

    ClassificationReport rep;
    rep.type = rs.type_string();
    rep.labels = format_labels(rs.components(), w);
    rep.I_varpi = pd.I;
    rep.n = pd.u_minus_dim + 1;
    rep.dimE = rs.irrep_dimension(w);
    rep.condition_C = condition_C(rs, pd);
    rep.condition_D = condition_D(rs.components(), w);
    // (C) and (D) must agree; both routes are computed so a table edit or a
    // root-generation bug cannot pass silently.
    if (rep.condition_C != rep.condition_D)
        throw std::logic_error("condition (C) and condition (D) disagree for " + rep.type + " " + rep.labels);
    rep.singular = rep.dimE > rep.n;
    rep.ufd = w.is_fundamental();
    rep.quadric_count = quadric_count(rs, w);
    const bool counterexample = rep.ufd && rep.condition_D && rep.singular;
    rep.negative_answer = counterexample && rep.n >= 4;
    rep.n3_candidate = counterexample && rep.n == 3;
    return rep;
}

inline ClassificationReport classify(const std::vector<SimpleType>& components, const Weight& w) {
    return classify(RootSystem::build(components), w);
}

inline ClassificationReport classify(const SimpleType& type, const Weight& w) {
    return classify(RootSystem::build(type), w);
}

inline int max_rank_cap() {
    if (const char* env = std::getenv("MAX_RANK_CAP")) {
        const int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    return 8;
}

/// All simple types with rank at most max_rank, in (family, rank) order.
inline std::vector<SimpleType> simple_types_up_to(int max_rank) {
    std::vector<SimpleType> types;
    for (int r = 1; r <= max_rank; ++r) types.push_back({Family::A, r});
    for (int r = 2; r <= max_rank; ++r) types.push_back({Family::B, r});
    for (int r = 2; r <= max_rank; ++r) types.push_back({Family::C, r});
    for (int r = 3; r <= max_rank; ++r) types.push_back({Family::D, r});
    for (int r = 6; r <= std::min(8, max_rank); ++r) types.push_back({Family::E, r});
    if (max_rank >= 4) types.push_back({Family::F, 4});
    if (max_rank >= 2) types.push_back({Family::G, 2});
    std::sort(types.begin(), types.end(), [](const SimpleType& a, const SimpleType& b) {
        if (a.family != b.family) return family_letter(a.family) < family_letter(b.family);
        return a.rank < b.rank;
    });
    return types;
}

/// Classify every (simple type, fundamental weight) pair with rank <= max_rank,
/// ordered by (family, rank, node).
inline std::vector<ClassificationReport> enumerate_fundamental(int max_rank, int cap = max_rank_cap()) {
    if (max_rank < 1 || max_rank > cap)
        throw std::invalid_argument("max_rank must be in [1, " + std::to_string(cap) + "], got " +
                                    std::to_string(max_rank));
    std::vector<ClassificationReport> out;
    for (const SimpleType& t : simple_types_up_to(max_rank)) {
        const RootSystem rs = RootSystem::build(t);
        for (int k = 1; k <= t.rank; ++k) out.push_back(classify(rs, fundamental_weight(t.rank, k)));
    }
    return out;
}

}  // namespace hwcone
