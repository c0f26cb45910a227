#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwcone/rational.hpp"

namespace hwcone {

/// An ordered list of variable names. Polynomials over the same ring share it.
class Ring {
  public:
    explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i)
            for (size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name " + names_[i]);
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<size_t> index(const std::string& name) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const Ring& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<Ring>(std::move(names)); }

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw std::invalid_argument("ring mismatch");
}

using Exponents = std::vector<int>;

/// Graded lexicographic, descending, so map iteration starts at the leading term.
struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Multivariate polynomial with exact coefficients in canonical form: no zero
/// coefficient is ever stored, so equal polynomials have equal term maps.
template <class C = Rational>
class Polynomial {
  public:
    using TermMap = std::map<Exponents, C, GrlexDesc>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, C value) {
        Polynomial p(std::move(ring));
        p.add_term(Exponents(p.ring_->size(), 0), std::move(value));
        return p;
    }

    static Polynomial variable(RingPtr ring, size_t i) {
        Polynomial p(ring);
        if (i >= ring->size()) throw std::invalid_argument("variable index out of range");
        Exponents e(ring->size(), 0);
        e[i] = 1;
        p.add_term(std::move(e), C(1));
        return p;
    }

    static Polynomial variable(const RingPtr& ring, const std::string& name) {
        const auto i = ring->index(name);
        if (!i) throw std::invalid_argument("no variable named " + name);
        return variable(ring, *i);
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int total_degree() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
        return deg;
    }

    void add_term(Exponents e, C coeff) {
        if (coeff == 0) return;
        if (e.size() != ring_->size()) throw std::invalid_argument("exponent arity mismatch");
        auto [it, fresh] = terms_.emplace(std::move(e), coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_ring(ring_, o.ring_);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        require_same_ring(ring_, o.ring_);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial out(ring_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial out(a.ring_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const C& k) const {
        Polynomial out(ring_);
        if (k == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
        return out;
    }

    bool operator==(const Polynomial& o) const { return same_ring(ring_, o.ring_) && terms_ == o.terms_; }

    /// d/dx_i.
    Polynomial derivative(size_t i) const {
        Polynomial out(ring_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d(e);
            d[i] -= 1;
            out.add_term(std::move(d), c * C(e[i]));
        }
        return out;
    }

    /// Image under x_i -> images[i]; the images may live in a different ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != ring_->size()) throw std::invalid_argument("substitute: arity mismatch");
        if (images.empty()) throw std::invalid_argument("substitute: empty image list");
        const RingPtr& target = images[0].ring_;
        for (const auto& img : images) require_same_ring(target, img.ring_);
        Polynomial out(target);
        for (const auto& [e, c] : terms_) {
            Polynomial term = constant(target, c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term *= images[i];
            out += term;
        }
        return out;
    }

    /// Evaluation at a rational point.
    C evaluate(const std::vector<C>& point) const {
        if (point.size() != ring_->size()) throw std::invalid_argument("evaluate: arity mismatch");
        C acc(0);
        for (const auto& [e, c] : terms_) {
            C term = c;
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term *= point[i];
            acc += term;
        }
        return acc;
    }

    std::string str() const {
        return str([](const std::string& n) { return n; });
    }

    template <class NameFn>
    std::string str(NameFn&& name_of) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            C abs_c = c < 0 ? -c : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string monomial;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!monomial.empty()) monomial += "*";
                monomial += name_of(ring_->name(i));
                if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
            }
            if (monomial.empty()) {
                out += to_string(abs_c);
            } else {
                if (abs_c != 1) out += to_string(abs_c) + "*";
                out += monomial;
            }
        }
        return out;
    }

  private:
    RingPtr ring_;
    TermMap terms_;
};

/// Remainder of p on division by a single divisor f (enough for a principal
/// ideal): repeatedly cancels any term divisible by the leading term of f
/// under graded lex. p is in (f) iff the remainder is zero.
template <class C>
Polynomial<C> reduce_mod(Polynomial<C> p, const Polynomial<C>& f) {
    require_same_ring(p.ring(), f.ring());
    if (f.is_zero()) throw std::invalid_argument("reduce_mod: zero divisor");
    const auto& lead = *f.terms().begin();
    const Exponents& le = lead.first;
    const C& lc = lead.second;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& [e, c] : p.terms()) {
            bool divisible = true;
            for (size_t i = 0; i < e.size() && divisible; ++i) divisible = e[i] >= le[i];
            if (!divisible) continue;
            Exponents q(e);
            for (size_t i = 0; i < q.size(); ++i) q[i] -= le[i];
            Polynomial<C> multiplier(p.ring());
            multiplier.add_term(std::move(q), c / lc);
            p -= multiplier * f;
            progress = true;
            break;  // the term map changed; restart the scan
        }
    }
    return p;
}

}  // namespace hwcone
