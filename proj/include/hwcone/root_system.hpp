#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hwcone/rational.hpp"

namespace hwcone {

// Simple root indexing follows Bourbaki throughout: node 1 of B_l is the long
// end, node l of C_l the long end, nodes l-1 and l of D_l the fork tips, node 2
// of E_l the branch node attached to node 4.

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline Family family_from_letter(char c) {
    if (c < 'A' || c > 'G') throw std::invalid_argument(std::string("unknown family letter '") + c + "'");
    return static_cast<Family>(c);
}

struct SimpleType {
    Family family;
    int rank;

    std::string str() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
};

inline void validate(const SimpleType& t) {
    const int r = t.rank;
    switch (t.family) {
        case Family::A:
            if (r < 1) throw std::invalid_argument("type A requires rank >= 1, got " + std::to_string(r));
            return;
        case Family::B:
            if (r < 2) throw std::invalid_argument("type B requires rank >= 2, got " + std::to_string(r));
            return;
        case Family::C:
            if (r < 2) throw std::invalid_argument("type C requires rank >= 2, got " + std::to_string(r));
            return;
        case Family::D:
            if (r < 3) throw std::invalid_argument("type D requires rank >= 3, got " + std::to_string(r));
            return;
        case Family::E:
            if (r < 6 || r > 8) throw std::invalid_argument("type E requires rank in {6,7,8}, got " + std::to_string(r));
            return;
        case Family::F:
            if (r != 4) throw std::invalid_argument("type F requires rank 4, got " + std::to_string(r));
            return;
        case Family::G:
            if (r != 2) throw std::invalid_argument("type G requires rank 2, got " + std::to_string(r));
            return;
    }
    throw std::invalid_argument("unknown family");
}

/// Closed-form |Phi+| for a simple type.
inline int positive_root_count(const SimpleType& t) {
    const int l = t.rank;
    switch (t.family) {
        case Family::A: return l * (l + 1) / 2;
        case Family::B:
        case Family::C: return l * l;
        case Family::D: return l * (l - 1);
        case Family::E: return l == 6 ? 36 : (l == 7 ? 63 : 120);
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;
}

/// A root as integer coordinates in the simple-root basis.
struct Root {
    std::vector<int> coords;

    int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }
    bool operator==(const Root& o) const = default;
};

struct CoordsHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Dominant weight by its numerical labels m_i = <w, alpha_i^vee>.
struct Weight {
    std::vector<int> labels;

    bool is_zero() const {
        return std::all_of(labels.begin(), labels.end(), [](int m) { return m == 0; });
    }
    // Exactly one label equal to 1, all others 0.
    bool is_fundamental() const {
        int ones = 0;
        for (int m : labels) {
            if (m == 1)
                ++ones;
            else if (m != 0)
                return false;
        }
        return ones == 1;
    }
    bool is_dominant() const {
        return std::all_of(labels.begin(), labels.end(), [](int m) { return m >= 0; });
    }
    bool operator==(const Weight& o) const = default;
};

/// The fundamental weight at 1-based Bourbaki node k.
inline Weight fundamental_weight(int rank, int k) {
    if (k < 1 || k > rank) throw std::invalid_argument("fundamental weight index out of range");
    Weight w{std::vector<int>(rank, 0)};
    w.labels[k - 1] = 1;
    return w;
}

inline Weight weyl_vector(int rank) { return Weight{std::vector<int>(rank, 1)}; }

inline Weight doubled(const Weight& w) {
    Weight out = w;
    for (int& m : out.labels) m *= 2;
    return out;
}

/// A finite root system for a simple type or an ordered product of simple
/// types. Cartan entry cartan[i][j] = <alpha_j, alpha_i^vee>; symmetrizer d is
/// the minimal positive integer vector with d_i * cartan[i][j] symmetric, so
/// (alpha_i, alpha_j) = d_i * cartan[i][j].
class RootSystem {
  public:
    static RootSystem build(const SimpleType& type) { return build(std::vector<SimpleType>{type}); }

    static RootSystem build(const std::vector<SimpleType>& components) {
        if (components.empty()) throw std::invalid_argument("empty type product");
        for (const auto& t : components) validate(t);
        RootSystem rs;
        rs.components_ = components;
        rs.rank_ = 0;
        for (const auto& t : components) {
            rs.offsets_.push_back(rs.rank_);
            rs.rank_ += t.rank;
        }
        rs.cartan_.assign(rs.rank_, std::vector<int>(rs.rank_, 0));
        rs.symmetrizer_.assign(rs.rank_, 1);
        for (size_t c = 0; c < components.size(); ++c)
            fill_cartan_block(components[c], rs.offsets_[c], rs.cartan_, rs.symmetrizer_);
        rs.generate_positive_roots();
        return rs;
    }

    int rank() const { return rank_; }
    const std::vector<SimpleType>& components() const { return components_; }
    const std::vector<int>& component_offsets() const { return offsets_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<int>& symmetrizer() const { return symmetrizer_; }
    const std::vector<Root>& positive_roots() const { return positive_roots_; }

    std::string type_string() const {
        std::string s;
        for (size_t i = 0; i < components_.size(); ++i) {
            if (i) s += 'x';
            s += components_[i].str();
        }
        return s;
    }

    Root simple_root(int i) const {  // 1-based
        if (i < 1 || i > rank_) throw std::invalid_argument("simple root index out of range");
        Root r{std::vector<int>(rank_, 0)};
        r.coords[i - 1] = 1;
        return r;
    }

    /// Membership in Phi = Phi+ cup -Phi+.
    bool is_root(const Root& r) const {
        if (static_cast<int>(r.coords.size()) != rank_) return false;
        bool nonneg = true, nonpos = true;
        for (int c : r.coords) {
            if (c < 0) nonneg = false;
            if (c > 0) nonpos = false;
        }
        if (nonneg && !nonpos) return positive_set_.count(r.coords) > 0;
        if (nonpos && !nonneg) {
            std::vector<int> neg(r.coords);
            for (int& c : neg) c = -c;
            return positive_set_.count(neg) > 0;
        }
        return false;  // zero or mixed signs
    }

    /// <w, alpha^vee> = 2(w, alpha)/(alpha, alpha), exact.
    long long pairing(const Weight& w, const Root& alpha) const {
        require_arity(w);
        if (!is_root(alpha)) throw std::invalid_argument("pairing: not a root of this system");
        long long n = 0, d = 0;
        for (int i = 0; i < rank_; ++i) {
            n += 2ll * alpha.coords[i] * symmetrizer_[i] * w.labels[i];
            long long row = 0;
            for (int j = 0; j < rank_; ++j) row += static_cast<long long>(cartan_[i][j]) * alpha.coords[j];
            d += static_cast<long long>(alpha.coords[i]) * symmetrizer_[i] * row;
        }
        if (d == 0 || n % d != 0) throw std::logic_error("pairing: non-integral value");
        return n / d;
    }

    /// True iff a + b is a root.
    bool is_sum_root(const Root& a, const Root& b) const {
        if (!is_root(a) || !is_root(b)) throw std::invalid_argument("is_sum_root: arguments must be roots");
        Root s{a.coords};
        for (int i = 0; i < rank_; ++i) s.coords[i] += b.coords[i];
        return is_root(s);
    }

    /// dim E(w) by the Weyl dimension formula, exact big-integer arithmetic.
    /// The per-root factor <w+rho, alpha^vee>/<rho, alpha^vee> reduces to
    /// sum_j c_j d_j (m_j+1) / sum_j c_j d_j: the coroot normalizer cancels.
    BigInt irrep_dimension(const Weight& w) const {
        require_arity(w);
        if (!w.is_dominant()) throw std::invalid_argument("irrep_dimension: labels must be nonnegative");
        BigInt num = 1, den = 1;
        for (const Root& alpha : positive_roots_) {
            long long a = 0, b = 0;
            for (int j = 0; j < rank_; ++j) {
                const long long cd = static_cast<long long>(alpha.coords[j]) * symmetrizer_[j];
                a += cd * (w.labels[j] + 1ll);
                b += cd;
            }
            num *= a;
            den *= b;
        }
        BigInt q, r;
        boost::multiprecision::divide_qr(num, den, q, r);
        if (r != 0) throw std::logic_error("irrep_dimension: inexact division");
        return q;
    }

  private:
    RootSystem() = default;

    void require_arity(const Weight& w) const {
        if (static_cast<int>(w.labels.size()) != rank_)
            throw std::invalid_argument("weight has " + std::to_string(w.labels.size()) + " labels, expected " +
                                        std::to_string(rank_));
    }

    static void fill_cartan_block(const SimpleType& t, int off, std::vector<std::vector<int>>& c,
                                  std::vector<int>& d) {
        const int l = t.rank;
        auto link = [&](int i, int j) {  // 1-based within the component, single bond
            c[off + i - 1][off + j - 1] = -1;
            c[off + j - 1][off + i - 1] = -1;
        };
        for (int i = off; i < off + l; ++i) c[i][i] = 2;
        switch (t.family) {
            case Family::A:
                for (int i = 1; i < l; ++i) link(i, i + 1);
                break;
            case Family::B:  // alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2
                for (int i = 1; i < l - 1; ++i) link(i, i + 1);
                c[off + l - 2][off + l - 1] = -1;
                c[off + l - 1][off + l - 2] = -2;
                for (int i = 0; i < l - 1; ++i) d[off + i] = 2;
                d[off + l - 1] = 1;
                break;
            case Family::C:  // alpha_l long: <alpha_l, alpha_{l-1}^vee> = -2
                for (int i = 1; i < l - 1; ++i) link(i, i + 1);
                c[off + l - 2][off + l - 1] = -2;
                c[off + l - 1][off + l - 2] = -1;
                for (int i = 0; i < l - 1; ++i) d[off + i] = 1;
                d[off + l - 1] = 2;
                break;
            case Family::D:
                for (int i = 1; i < l - 1; ++i) link(i, i + 1);
                link(l - 2, l);
                break;
            case Family::E:
                link(1, 3);
                link(3, 4);
                link(2, 4);
                for (int i = 4; i < l; ++i) link(i, i + 1);
                break;
            case Family::F:  // alpha_3, alpha_4 short
                link(1, 2);
                c[off + 1][off + 2] = -1;
                c[off + 2][off + 1] = -2;
                link(3, 4);
                d[off + 0] = d[off + 1] = 2;
                d[off + 2] = d[off + 3] = 1;
                break;
            case Family::G:  // alpha_1 short, alpha_2 long
                c[off + 0][off + 1] = -3;
                c[off + 1][off + 0] = -1;
                d[off + 0] = 1;
                d[off + 1] = 3;
                break;
        }
    }

    // Closure by height levels: every positive root of height h+1 is a
    // height-h root plus a simple root, and alpha + alpha_i is a root iff
    // p - <alpha, alpha_i^vee> > 0 with p the length of the descending
    // alpha_i-string below alpha. Walking down stays within already-generated
    // heights, so levels are complete when consumed.
    void generate_positive_roots() {
        std::vector<std::vector<int>> level;
        for (int i = 0; i < rank_; ++i) {
            std::vector<int> simple(rank_, 0);
            simple[i] = 1;
            level.push_back(simple);
            positive_set_.insert(simple);
        }
        while (!level.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& alpha : level) {
                for (int i = 0; i < rank_; ++i) {
                    std::vector<int> cand(alpha);
                    cand[i] += 1;
                    if (positive_set_.count(cand)) continue;
                    int p = 0;
                    std::vector<int> down(alpha);
                    while (true) {
                        down[i] -= 1;
                        bool nonneg = std::all_of(down.begin(), down.end(), [](int c) { return c >= 0; });
                        if (!nonneg || !positive_set_.count(down)) break;
                        ++p;
                    }
                    long long m = 0;
                    for (int j = 0; j < rank_; ++j) m += static_cast<long long>(cartan_[i][j]) * alpha[j];
                    if (p - m > 0) {
                        positive_set_.insert(cand);
                        next.push_back(cand);
                    }
                }
            }
            level = std::move(next);
        }
        for (const auto& coords : positive_set_) positive_roots_.push_back(Root{coords});
        std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
            const int ha = a.height(), hb = b.height();
            if (ha != hb) return ha < hb;
            return a.coords < b.coords;
        });
    }

    std::vector<SimpleType> components_;
    std::vector<int> offsets_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> symmetrizer_;
    std::vector<Root> positive_roots_;
    std::unordered_set<std::vector<int>, CoordsHash> positive_set_;
};

inline RootSystem build_root_system(const SimpleType& type) { return RootSystem::build(type); }
inline RootSystem build_root_system(const std::vector<SimpleType>& components) { return RootSystem::build(components); }

}  // namespace hwcone
