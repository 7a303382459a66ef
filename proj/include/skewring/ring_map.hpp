#pragma once

// Validated self-maps of a finite ring: endomorphisms, automorphisms and
// sigma-derivations, plus q-skew certificates and quotient-induced maps.
// Validation is exhaustive over all pairs; a failure carries the pair.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewring/finite_ring.hpp"
#include "skewring/ideal.hpp"

namespace skewring {

enum class MapTag { Unvalidated, Endomorphism, Automorphism, SigmaDerivation };

class RingMap {
  public:
    RingMap(FiniteRing ring, std::vector<Elem> table, MapTag tag = MapTag::Unvalidated,
            std::shared_ptr<const RingMap> sigma = nullptr)
        : ring_(std::move(ring)), table_(std::move(table)), tag_(tag), sigma_(std::move(sigma)) {
        if (table_.size() != ring_.order()) throw ConfigError("map table size != ring order");
        for (Elem v : table_)
            if (v >= ring_.order()) throw ConfigError("map table entry out of range");
    }

    const FiniteRing& ring() const { return ring_; }
    Elem operator()(Elem a) const { return table_[a]; }
    const std::vector<Elem>& table() const { return table_; }
    MapTag tag() const { return tag_; }
    bool is_endomorphism() const {
        return tag_ == MapTag::Endomorphism || tag_ == MapTag::Automorphism;
    }
    bool is_automorphism() const { return tag_ == MapTag::Automorphism; }
    bool is_sigma_derivation() const { return tag_ == MapTag::SigmaDerivation; }

    /// The sigma a derivation was validated against.
    const RingMap& sigma() const {
        if (!sigma_) throw DomainError("map carries no sigma reference");
        return *sigma_;
    }
    std::shared_ptr<const RingMap> sigma_ptr() const { return sigma_; }

    bool same_table(const RingMap& o) const { return table_ == o.table_; }

    RingMap inverse() const {
        if (!is_automorphism()) throw DomainError("inverse of a non-automorphism");
        std::vector<Elem> inv(ring_.order());
        for (Elem a = 0; a < ring_.order(); ++a) inv[table_[a]] = a;
        return RingMap(ring_, std::move(inv), MapTag::Automorphism);
    }

    static RingMap identity(const FiniteRing& R) {
        std::vector<Elem> t(R.order());
        for (Elem a = 0; a < R.order(); ++a) t[a] = a;
        return RingMap(R, std::move(t), MapTag::Automorphism);
    }

    static RingMap zero_map(const FiniteRing& R) {
        return RingMap(R, std::vector<Elem>(R.order(), R.zero()));
    }

  private:
    FiniteRing ring_;
    std::vector<Elem> table_;
    MapTag tag_;
    std::shared_ptr<const RingMap> sigma_;
};

/// Composition f after g.
inline RingMap compose(const RingMap& f, const RingMap& g) {
    if (!f.ring().same_as(g.ring())) throw DomainError("compose: maps over different rings");
    std::vector<Elem> t(f.ring().order());
    for (Elem a = 0; a < t.size(); ++a) t[a] = f(g(a));
    MapTag tag = (f.is_automorphism() && g.is_automorphism()) ? MapTag::Automorphism
                                                              : MapTag::Unvalidated;
    return RingMap(f.ring(), std::move(t), tag);
}

// Law checks -----------------------------------------------------------------

struct Counterexample {
    std::string law;
    Elem a, b, lhs, rhs;
};

inline std::optional<Counterexample> check_endomorphism(const RingMap& m) {
    const FiniteRing& R = m.ring();
    if (m(R.one()) != R.one())
        return Counterexample{"one-to-one-element", R.one(), R.one(), m(R.one()), R.one()};
    for (Elem a = 0; a < R.order(); ++a)
        for (Elem b = 0; b < R.order(); ++b) {
            Elem l = m(R.add(a, b)), r = R.add(m(a), m(b));
            if (l != r) return Counterexample{"additivity", a, b, l, r};
            l = m(R.mul(a, b));
            r = R.mul(m(a), m(b));
            if (l != r) return Counterexample{"multiplicativity", a, b, l, r};
        }
    return std::nullopt;
}

inline std::optional<Counterexample> check_bijective(const RingMap& m) {
    std::vector<char> hit(m.ring().order(), 0);
    for (Elem a = 0; a < m.ring().order(); ++a) {
        if (hit[m(a)])
            return Counterexample{"injectivity", a, m(a), m(a), m(a)};
        hit[m(a)] = 1;
    }
    return std::nullopt;
}

inline std::optional<Counterexample> check_sigma_derivation(const RingMap& d, const RingMap& s) {
    const FiniteRing& R = d.ring();
    for (Elem a = 0; a < R.order(); ++a)
        for (Elem b = 0; b < R.order(); ++b) {
            Elem l = d(R.add(a, b)), r = R.add(d(a), d(b));
            if (l != r) return Counterexample{"additivity", a, b, l, r};
            l = d(R.mul(a, b));
            r = R.add(R.mul(d(a), b), R.mul(s(a), d(b)));
            if (l != r) return Counterexample{"sigma-Leibniz", a, b, l, r};
        }
    return std::nullopt;
}

enum class MapClaim { Endomorphism, Automorphism, SigmaDerivation };

/// Exhaustively checks the claimed law and returns the map with the upgraded
/// tag, or throws CounterexampleError.
inline RingMap validate(const RingMap& m, MapClaim claim,
                        std::shared_ptr<const RingMap> sigma = nullptr) {
    auto raise = [](const Counterexample& c) -> void {
        throw CounterexampleError(c.law, c.a, c.b, c.lhs, c.rhs);
    };
    switch (claim) {
        case MapClaim::Endomorphism: {
            if (auto c = check_endomorphism(m)) raise(*c);
            return RingMap(m.ring(), m.table(), MapTag::Endomorphism);
        }
        case MapClaim::Automorphism: {
            if (auto c = check_endomorphism(m)) raise(*c);
            if (auto c = check_bijective(m)) raise(*c);
            return RingMap(m.ring(), m.table(), MapTag::Automorphism);
        }
        case MapClaim::SigmaDerivation: {
            if (!sigma) throw DomainError("sigma-derivation claim needs a validated sigma");
            if (!sigma->is_endomorphism())
                throw DomainError("sigma must be a validated endomorphism");
            if (auto c = check_sigma_derivation(m, *sigma)) raise(*c);
            return RingMap(m.ring(), m.table(), MapTag::SigmaDerivation, std::move(sigma));
        }
    }
    throw Error("unreachable");
}

// Structural constructors ------------------------------------------------------

/// r -> u r u^{-1} for a unit u.
inline RingMap inner_automorphism(const FiniteRing& R, Elem u) {
    auto ui = R.inverse(u);
    if (!ui) throw ConfigError("inner_auto: u is not a unit");
    std::vector<Elem> t(R.order());
    for (Elem a = 0; a < R.order(); ++a) t[a] = R.mul(R.mul(u, a), *ui);
    return RingMap(R, std::move(t), MapTag::Automorphism);
}

/// r -> b r - sigma(r) b, a sigma-derivation by construction.
inline RingMap inner_sigma_derivation(const FiniteRing& R, Elem b, const RingMap& sigma) {
    if (!sigma.is_endomorphism()) throw DomainError("inner derivation needs a validated sigma");
    std::vector<Elem> t(R.order());
    for (Elem a = 0; a < R.order(); ++a) t[a] = R.sub(R.mul(b, a), R.mul(sigma(a), b));
    return RingMap(R, std::move(t), MapTag::SigmaDerivation,
                   std::make_shared<RingMap>(sigma));
}

namespace detail {

inline std::vector<Elem> trunc_decompose(const FiniteRing& R, Elem e) {
    auto info = R.trunc_poly_info();
    if (!info) throw ConfigError("operation requires a trunc_poly ring");
    std::vector<Elem> c(info->k);
    std::uint64_t v = e;
    for (unsigned i = 0; i < info->k; ++i) { c[i] = Elem(v % info->p); v /= info->p; }
    return c;
}

/// t^i as a ring element (zero once i >= k).
inline Elem trunc_t_power(const FiniteRing& R, unsigned i) {
    auto info = *R.trunc_poly_info();
    if (i >= info.k) return R.zero();
    Elem t = Elem(info.p);  // digit c_1 = 1
    return R.pow(t, i);
}

}  // namespace detail

/// The endomorphism of F_p[t]/(t^k) with t -> c t, c invertible.
inline RingMap scale_var(const FiniteRing& R, Elem c) {
    auto info = R.trunc_poly_info();
    if (!info) throw ConfigError("scale_var requires a trunc_poly ring");
    if (!R.is_unit(c)) throw ConfigError("scale_var: c is not invertible");
    std::vector<Elem> tab(R.order());
    for (Elem e = 0; e < R.order(); ++e) {
        auto digits = detail::trunc_decompose(R, e);
        Elem acc = R.zero(), ci = R.one();
        for (unsigned i = 0; i < info->k; ++i) {
            Elem term = R.zero();
            for (Elem rep = 0; rep < digits[i]; ++rep)
                term = R.add(term, R.mul(ci, detail::trunc_t_power(R, i)));
            acc = R.add(acc, term);
            ci = R.mul(ci, c);
        }
        tab[e] = acc;
    }
    return validate(RingMap(R, std::move(tab)), MapClaim::Automorphism);
}

/// The sigma-derivation of F_p[t]/(t^k) determined by t -> f, extended by
/// additivity and the sigma-Leibniz rule. Rejects extensions inconsistent
/// with t^k = 0.
inline RingMap var_derivation(const FiniteRing& R, Elem f, const RingMap& sigma) {
    auto info = R.trunc_poly_info();
    if (!info) throw ConfigError("var_derivation requires a trunc_poly ring");
    if (!sigma.is_endomorphism()) throw DomainError("var_derivation needs a validated sigma");
    Elem t = Elem(info->p);
    Elem st = sigma(t);
    // delta(t^i) = sum_j sigma(t)^j f t^{i-1-j}; the i = k instance must be 0.
    auto delta_t_pow = [&](unsigned i) {
        Elem acc = R.zero();
        for (unsigned j = 0; j < i; ++j)
            acc = R.add(acc, R.mul(R.mul(R.pow(st, j), f), detail::trunc_t_power(R, i - 1 - j)));
        return acc;
    };
    if (delta_t_pow(info->k) != R.zero())
        throw ConfigError("var_derivation: t -> " + std::to_string(f) +
                          " is inconsistent with t^k = 0");
    std::vector<Elem> tab(R.order());
    for (Elem e = 0; e < R.order(); ++e) {
        auto digits = detail::trunc_decompose(R, e);
        Elem acc = R.zero();
        for (unsigned i = 1; i < info->k; ++i)
            for (Elem rep = 0; rep < digits[i]; ++rep) acc = R.add(acc, delta_t_pow(i));
        tab[e] = acc;
    }
    (void)t;
    return validate(RingMap(R, std::move(tab)), MapClaim::SigmaDerivation,
                    std::make_shared<RingMap>(sigma));
}

// q-skew structure --------------------------------------------------------------

struct QSkewCertificate {
    Elem q;
    RingMap sigma, delta;
    bool verified = false;
};

inline std::vector<Elem> central_invertible_elements(const FiniteRing& R) {
    std::vector<Elem> out;
    for (Elem a = 0; a < R.order(); ++a)
        if (R.is_unit(a) && R.is_central(a)) out.push_back(a);
    return out;
}

/// First candidate q (in encoding order) with delta(sigma(r)) = q sigma(delta(r))
/// for every r.
inline std::optional<QSkewCertificate> q_skew_check(const RingMap& sigma, const RingMap& delta,
                                                    std::span<const Elem> candidates) {
    if (!sigma.ring().same_as(delta.ring()))
        throw DomainError("q_skew_check: maps over different rings");
    if (!sigma.is_automorphism()) throw DomainError("q_skew_check: sigma must be an automorphism");
    if (!delta.is_sigma_derivation())
        throw DomainError("q_skew_check: delta must be a validated sigma-derivation");
    const FiniteRing& R = sigma.ring();
    for (Elem q : candidates) {
        bool ok = true;
        for (Elem r = 0; r < R.order() && ok; ++r)
            ok = delta(sigma(r)) == R.mul(q, sigma(delta(r)));
        if (ok) return QSkewCertificate{q, sigma, delta, true};
    }
    return std::nullopt;
}

inline std::optional<QSkewCertificate> q_skew_check(const RingMap& sigma, const RingMap& delta) {
    auto cands = central_invertible_elements(sigma.ring());
    return q_skew_check(sigma, delta, cands);
}

/// (n!)_q = prod_{i=1..n} (1 + q + ... + q^{i-1}), computed in R.
inline Elem q_factorial(const FiniteRing& R, Elem q, unsigned n) {
    Elem prod = R.one();
    for (unsigned i = 1; i <= n; ++i) {
        Elem sum = R.zero(), qp = R.one();
        for (unsigned j = 0; j < i; ++j) {
            sum = R.add(sum, qp);
            qp = R.mul(qp, q);
        }
        prod = R.mul(prod, sum);
    }
    return prod;
}

// Quotient-induced maps ----------------------------------------------------------

/// The map induced on R/M by m, requiring m(M) subset of M (and m(M) = M when
/// m is an automorphism). Tags carry over after revalidation; the sigma of an
/// induced derivation is the induced sigma.
inline RingMap induce_on_quotient(const FiniteRing& Rq, const RingMap& m) {
    const auto* qi = Rq.quotient_info();
    if (!qi) throw DomainError("induce_on_quotient: target is not a quotient ring");
    if (!qi->base.same_as(m.ring()))
        throw DomainError("induce_on_quotient: map is not over the quotient's base ring");
    const FiniteRing& B = qi->base;
    // M is the kernel coset of zero
    for (Elem a = 0; a < B.order(); ++a) {
        if (qi->eta[a] != Rq.zero()) continue;
        if (qi->eta[m(a)] != Rq.zero()) throw StabilityViolation(a, m(a));
    }
    std::vector<Elem> tab(Rq.order());
    for (Elem c = 0; c < Rq.order(); ++c) tab[c] = qi->eta[m(qi->rep[c])];
    // well-definedness across full cosets
    for (Elem a = 0; a < B.order(); ++a)
        if (qi->eta[m(a)] != tab[qi->eta[a]])
            throw StabilityViolation(a, m(a));
    RingMap raw(Rq, std::move(tab));
    switch (m.tag()) {
        case MapTag::Automorphism:
            return validate(raw, MapClaim::Automorphism);
        case MapTag::Endomorphism:
            return validate(raw, MapClaim::Endomorphism);
        case MapTag::SigmaDerivation: {
            auto induced_sigma =
                std::make_shared<RingMap>(induce_on_quotient(Rq, m.sigma()));
            return validate(raw, MapClaim::SigmaDerivation, std::move(induced_sigma));
        }
        default:
            return raw;
    }
}

}  // namespace skewring
