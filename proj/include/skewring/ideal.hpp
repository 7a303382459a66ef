#pragma once

// Two-sided ideals of finite rings, stored as full element sets, and the
// annihilator / radical / regularity machinery on top of them.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewring/finite_ring.hpp"

namespace skewring {

namespace detail {

/// Additive-group closure of a seed set inside (R, +).
inline std::vector<char> additive_closure_mask(const FiniteRing& R, std::vector<char> mask) {
    mask[R.zero()] = 1;
    std::vector<Elem> work;
    for (Elem a = 0; a < R.order(); ++a)
        if (mask[a]) work.push_back(a);
    while (!work.empty()) {
        Elem a = work.back();
        work.pop_back();
        Elem na = R.neg(a);
        if (!mask[na]) { mask[na] = 1; work.push_back(na); }
        for (Elem b = 0; b < R.order(); ++b) {
            if (!mask[b]) continue;
            Elem s = R.add(a, b);
            if (!mask[s]) { mask[s] = 1; work.push_back(s); }
        }
    }
    return mask;
}

inline std::vector<Elem> mask_to_sorted(const std::vector<char>& mask) {
    std::vector<Elem> out;
    for (Elem a = 0; a < mask.size(); ++a)
        if (mask[a]) out.push_back(a);
    return out;
}

}  // namespace detail

/// A two-sided ideal, kept as its full (sorted) element set plus a
/// membership bitmap. The constructor verifies closure.
class Ideal {
  public:
    Ideal(FiniteRing ring, std::vector<Elem> elements)
        : ring_(std::move(ring)), elems_(std::move(elements)), mask_(ring_.order(), 0) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        for (Elem a : elems_) {
            if (a >= ring_.order()) throw DomainError("ideal element out of range");
            mask_[a] = 1;
        }
        verify_closure();
    }

    const FiniteRing& ring() const { return ring_; }
    const std::vector<Elem>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(Elem a) const { return a < mask_.size() && mask_[a]; }
    bool is_zero() const { return elems_.size() == 1; }

  private:
    void verify_closure() const {
        if (!contains(ring_.zero())) throw DomainError("ideal does not contain zero");
        for (Elem a : elems_) {
            if (!contains(ring_.neg(a))) throw DomainError("ideal not closed under negation");
            for (Elem b : elems_)
                if (!contains(ring_.add(a, b))) throw DomainError("ideal not closed under addition");
            for (Elem r = 0; r < ring_.order(); ++r) {
                if (!contains(ring_.mul(r, a)))
                    throw DomainError("ideal not closed under left multiplication");
                if (!contains(ring_.mul(a, r)))
                    throw DomainError("ideal not closed under right multiplication");
            }
        }
    }

    FiniteRing ring_;
    std::vector<Elem> elems_;
    std::vector<char> mask_;
};

/// Smallest two-sided ideal containing gens (fixed-point closure).
inline Ideal ideal_closure(const FiniteRing& R, std::span<const Elem> gens) {
    std::vector<char> mask(R.order(), 0);
    mask[R.zero()] = 1;
    std::vector<Elem> work;
    for (Elem g : gens) {
        if (g >= R.order()) throw DomainError("generator out of range");
        if (!mask[g]) { mask[g] = 1; work.push_back(g); }
    }
    while (!work.empty()) {
        Elem a = work.back();
        work.pop_back();
        auto push = [&](Elem e) {
            if (!mask[e]) { mask[e] = 1; work.push_back(e); }
        };
        push(R.neg(a));
        for (Elem r = 0; r < R.order(); ++r) {
            push(R.mul(r, a));
            push(R.mul(a, r));
            if (mask[r]) push(R.add(a, r));
        }
    }
    return Ideal(R, detail::mask_to_sorted(mask));
}

inline Ideal ideal_closure(const FiniteRing& R, std::initializer_list<Elem> gens) {
    return ideal_closure(R, std::span<const Elem>(gens.begin(), gens.size()));
}

struct Annihilators {
    std::vector<Elem> left, right, both;
};

/// l.ann, r.ann and two-sided annihilator of a subset A, as plain sets.
inline Annihilators annihilators(const FiniteRing& R, std::span<const Elem> A) {
    Annihilators out;
    for (Elem r = 0; r < R.order(); ++r) {
        bool l = true, rt = true;
        for (Elem a : A) {
            if (l && R.mul(r, a) != R.zero()) l = false;
            if (rt && R.mul(a, r) != R.zero()) rt = false;
            if (!l && !rt) break;
        }
        if (l) out.left.push_back(r);
        if (rt) out.right.push_back(r);
        if (l && rt) out.both.push_back(r);
    }
    return out;
}

/// Least n with I^n = {0} (n-fold products, additively closed), or nullopt.
inline std::optional<unsigned> nilpotency_index(const FiniteRing& R, const Ideal& I) {
    std::vector<char> cur(R.order(), 0);
    for (Elem a : I.elements()) cur[a] = 1;
    std::vector<char> zero_only(R.order(), 0);
    zero_only[R.zero()] = 1;
    if (cur == zero_only) return 1;
    for (unsigned n = 2; n <= R.order() + 1; ++n) {
        std::vector<char> next(R.order(), 0);
        for (Elem a = 0; a < R.order(); ++a) {
            if (!cur[a]) continue;
            for (Elem b : I.elements()) next[R.mul(a, b)] = 1;
        }
        next = detail::additive_closure_mask(R, std::move(next));
        if (next == zero_only) return n;
        if (next == cur) return std::nullopt;  // stabilized away from zero
        cur = std::move(next);
    }
    return std::nullopt;
}

/// {a : 1 - ra is a unit for every r}; for finite rings this set is the
/// Jacobson radical and coincides with the prime radical. Asserts both the
/// ideal property and nilpotency.
inline Ideal jacobson_radical(const FiniteRing& R) {
    std::vector<Elem> rad;
    for (Elem a = 0; a < R.order(); ++a) {
        bool quasi = true;
        for (Elem r = 0; r < R.order() && quasi; ++r)
            quasi = R.is_unit(R.sub(R.one(), R.mul(r, a)));
        if (quasi) rad.push_back(a);
    }
    Ideal J(R, std::move(rad));
    if (!nilpotency_index(R, J))
        throw Error("radical of a finite ring failed to be nilpotent: ring table bug");
    return J;
}

inline Ideal prime_radical(const FiniteRing& R) { return jacobson_radical(R); }

inline bool is_semiprime(const FiniteRing& R) { return prime_radical(R).is_zero(); }

/// True iff no nonzero s in I has cs = 0 or sc = 0.
inline bool is_regular_in(const FiniteRing& R, Elem c, const Ideal& I) {
    if (!I.contains(c)) throw DomainError("is_regular_in: c is not an element of I");
    for (Elem s : I.elements()) {
        if (s == R.zero()) continue;
        if (R.mul(c, s) == R.zero() || R.mul(s, c) == R.zero()) return false;
    }
    return true;
}

/// True iff c has trivial left and right annihilator in all of R.
inline bool is_regular(const FiniteRing& R, Elem c) {
    for (Elem s = 0; s < R.order(); ++s) {
        if (s == R.zero()) continue;
        if (R.mul(c, s) == R.zero() || R.mul(s, c) == R.zero()) return false;
    }
    return true;
}

/// First element of J (in encoding order) that is regular in all of R.
inline std::optional<Elem> find_regular_element(const FiniteRing& R, std::span<const Elem> J) {
    std::vector<Elem> sorted(J.begin(), J.end());
    std::sort(sorted.begin(), sorted.end());
    for (Elem c : sorted)
        if (is_regular(R, c)) return c;
    return std::nullopt;
}

/// Quotient ring R/M with the canonical epimorphism eta. Quotient elements
/// are indexed by their least base-ring representative, in ascending order.
inline FiniteRing make_quotient(const FiniteRing& base, const Ideal& M,
                                std::size_t order_cap = kDefaultOrderCap) {
    if (!M.ring().same_as(base)) throw DomainError("quotient: ideal belongs to a different ring");
    std::vector<Elem> coset_rep(base.order(), detail::RingImpl::kNoInverse);
    std::vector<Elem> reps;
    for (Elem a = 0; a < base.order(); ++a) {
        if (coset_rep[a] != detail::RingImpl::kNoInverse) continue;
        reps.push_back(a);  // a is the least element of its coset
        for (Elem m : M.elements()) coset_rep[base.add(a, m)] = a;
    }
    detail::check_order_cap(reps.size(), order_cap);
    std::vector<Elem> eta(base.order());
    for (Elem a = 0; a < base.order(); ++a) {
        auto it = std::lower_bound(reps.begin(), reps.end(), coset_rep[a]);
        eta[a] = Elem(it - reps.begin());
    }
    return detail::finish_ring<detail::QuotientRing>(base, std::move(eta), std::move(reps));
}

}  // namespace skewring
