#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hwcone/polynomial.hpp"

namespace hwcone {

/// A k-derivation of a polynomial ring, determined by its values on the
/// variables and extended by linearity and the Leibniz rule.
template <class C = Rational>
class Derivation {
  public:
    Derivation(RingPtr ring, std::vector<Polynomial<C>> images) : ring_(std::move(ring)), images_(std::move(images)) {
        if (images_.size() != ring_->size()) throw std::invalid_argument("derivation needs one image per variable");
        for (const auto& img : images_) require_same_ring(ring_, img.ring());
    }

    static Derivation zero(RingPtr ring) {
        std::vector<Polynomial<C>> images(ring->size(), Polynomial<C>::zero(ring));
        return Derivation(std::move(ring), std::move(images));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial<C>>& images() const { return images_; }
    const Polynomial<C>& image(size_t i) const { return images_.at(i); }

    bool is_zero() const {
        for (const auto& img : images_)
            if (!img.is_zero()) return false;
        return true;
    }

    /// Leibniz extension: D(p) = sum_i dp/dx_i * D(x_i).
    Polynomial<C> apply(const Polynomial<C>& p) const {
        require_same_ring(ring_, p.ring());
        Polynomial<C> out(ring_);
        for (size_t i = 0; i < images_.size(); ++i) {
            if (images_[i].is_zero()) continue;
            out += p.derivative(i) * images_[i];
        }
        return out;
    }

    bool operator==(const Derivation& o) const { return same_ring(ring_, o.ring_) && images_ == o.images_; }

  private:
    RingPtr ring_;
    std::vector<Polynomial<C>> images_;
};

/// [d1, d2] = d1 . d2 - d2 . d1, itself a derivation.
template <class C>
Derivation<C> commutator(const Derivation<C>& d1, const Derivation<C>& d2) {
    require_same_ring(d1.ring(), d2.ring());
    std::vector<Polynomial<C>> images;
    images.reserve(d1.ring()->size());
    for (size_t i = 0; i < d1.ring()->size(); ++i)
        images.push_back(d1.apply(d2.image(i)) - d2.apply(d1.image(i)));
    return Derivation<C>(d1.ring(), std::move(images));
}

enum class Nilpotency {
    verified,   // every variable is annihilated within the bound
    unverified  // some variable survived; not a proof of non-nilpotency
};

/// Checks D^k(x_v) = 0 for every variable with k <= bound. Nilpotency on the
/// variables extends to the whole ring through the Leibniz rule.
template <class C>
Nilpotency is_locally_nilpotent(const Derivation<C>& d, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    for (size_t v = 0; v < d.ring()->size(); ++v) {
        Polynomial<C> p = Polynomial<C>::variable(d.ring(), v);
        for (int k = 0; k < bound && !p.is_zero(); ++k) p = d.apply(p);
        if (!p.is_zero()) return Nilpotency::unverified;
    }
    return Nilpotency::verified;
}

/// Extends a ring by fresh variables appended at the end.
inline RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& fresh) {
    std::vector<std::string> names = ring->names();
    names.insert(names.end(), fresh.begin(), fresh.end());
    return make_ring(std::move(names));
}

/// Re-expresses p in an extension of its ring (original variables must appear
/// as a prefix of the extended ring).
template <class C>
Polynomial<C> embed(const Polynomial<C>& p, const RingPtr& extended) {
    const size_t small = p.ring()->size();
    if (extended->size() < small) throw std::invalid_argument("embed: target ring too small");
    for (size_t i = 0; i < small; ++i)
        if (extended->name(i) != p.ring()->name(i)) throw std::invalid_argument("embed: variable order mismatch");
    Polynomial<C> out(extended);
    for (const auto& [e, c] : p.terms()) {
        Exponents ext(e);
        ext.resize(extended->size(), 0);
        out.add_term(std::move(ext), c);
    }
    return out;
}

/// The exponential flow of a locally nilpotent derivation, truncated exactly:
/// x_i -> sum_k t^k/k! D^k(x_i), with t a fresh variable. The series stops
/// when D^k(x_i) = 0; max_order guards against a non-nilpotent input.
template <class C>
std::pair<RingPtr, std::vector<Polynomial<C>>> exp_flow(const Derivation<C>& d, const std::string& t_name,
                                                        int max_order) {
    const RingPtr ext = extend_ring(d.ring(), {t_name});
    const Polynomial<C> t = Polynomial<C>::variable(ext, ext->size() - 1);
    std::vector<Polynomial<C>> flow;
    for (size_t i = 0; i < d.ring()->size(); ++i) {
        Polynomial<C> term = Polynomial<C>::variable(d.ring(), i);
        Polynomial<C> acc = embed(term, ext);
        Polynomial<C> t_power = Polynomial<C>::constant(ext, C(1));
        C factorial(1);
        int k = 1;
        for (; k <= max_order; ++k) {
            term = d.apply(term);
            if (term.is_zero()) break;
            t_power *= t;
            factorial *= C(k);
            acc += embed(term, ext) * t_power.scaled(C(1) / factorial);
        }
        if (k > max_order) throw std::invalid_argument("exp_flow: derivation not nilpotent within max_order");
        flow.push_back(std::move(acc));
    }
    return {ext, std::move(flow)};
}

}  // namespace hwcone
