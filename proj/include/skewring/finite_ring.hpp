#pragma once

// Exact finite unital rings with canonical integer element encodings,
// plus the ideal / annihilator / radical toolbox built on top of them.
//
// Element encodings are canonical bijections onto 0..order-1:
//   mod-n        residues 0..n-1
//   matrix(k,B)  row-major digits in base |B|, entry (0,0) least significant
//   product(L,R) e = l * |R| + r
//   trunc-poly   coefficient digits in base p, constant term least significant
//   quotient     index into the ascending list of least coset representatives
//   table        whatever the supplied tables use

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "skewring/errors.hpp"

namespace skewring {

inline constexpr std::size_t kDefaultOrderCap = std::size_t{1} << 16;

enum class RingKind { Mod, Matrix, Product, TruncPoly, Quotient, Table };

namespace detail {

struct RingImpl {
    RingKind kind;
    std::size_t order = 0;
    Elem zero = 0;
    Elem one = 0;
    std::string name;

    // Materialized once the structural rules are in place; every public
    // operation goes through these.
    std::vector<Elem> add_tab;  // order*order
    std::vector<Elem> mul_tab;  // order*order
    std::vector<Elem> neg_tab;
    std::vector<Elem> inv_tab;  // two-sided inverse, kNoInverse if none
    static constexpr Elem kNoInverse = 0xFFFFFFFFu;

    virtual ~RingImpl() = default;
    virtual Elem rule_add(Elem a, Elem b) const = 0;
    virtual Elem rule_mul(Elem a, Elem b) const = 0;

    Elem add(Elem a, Elem b) const { return add_tab[a * order + b]; }
    Elem mul(Elem a, Elem b) const { return mul_tab[a * order + b]; }

    void materialize() {
        add_tab.resize(order * order);
        mul_tab.resize(order * order);
        for (Elem a = 0; a < order; ++a)
            for (Elem b = 0; b < order; ++b) {
                add_tab[a * order + b] = rule_add(a, b);
                mul_tab[a * order + b] = rule_mul(a, b);
            }
        neg_tab.assign(order, 0);
        for (Elem a = 0; a < order; ++a)
            for (Elem b = 0; b < order; ++b)
                if (add(a, b) == zero) { neg_tab[a] = b; break; }
        inv_tab.assign(order, kNoInverse);
        for (Elem a = 0; a < order; ++a)
            for (Elem b = 0; b < order; ++b)
                if (mul(a, b) == one && mul(b, a) == one) { inv_tab[a] = b; break; }
    }
};

struct ModRing final : RingImpl {
    explicit ModRing(std::uint64_t n) {
        kind = RingKind::Mod;
        order = n;
        zero = 0;
        one = 1;
        name = "mod-" + std::to_string(n);
    }
    Elem rule_add(Elem a, Elem b) const override {
        return static_cast<Elem>((std::uint64_t(a) + b) % order);
    }
    Elem rule_mul(Elem a, Elem b) const override {
        return static_cast<Elem>((std::uint64_t(a) * b) % order);
    }
};

struct TableRing final : RingImpl {
    TableRing(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem one_elem) {
        kind = RingKind::Table;
        order = n;
        add_tab = std::move(add);
        mul_tab = std::move(mul);
        one = one_elem;
        name = "table-" + std::to_string(n);
        // zero is the additive identity of the supplied table
        bool found = false;
        for (Elem z = 0; z < order && !found; ++z) {
            bool ok = true;
            for (Elem a = 0; a < order && ok; ++a)
                ok = add_tab[z * order + a] == a && add_tab[a * order + z] == a;
            if (ok) { zero = z; found = true; }
        }
        if (!found) throw ConfigError("table ring has no additive identity");
        neg_tab.assign(order, 0);
        for (Elem a = 0; a < order; ++a) {
            bool ok = false;
            for (Elem b = 0; b < order; ++b)
                if (rule_add(a, b) == zero) { neg_tab[a] = b; ok = true; break; }
            if (!ok) throw ConfigError("table ring element " + std::to_string(a) + " has no negative");
        }
        inv_tab.assign(order, kNoInverse);
        for (Elem a = 0; a < order; ++a)
            for (Elem b = 0; b < order; ++b)
                if (rule_mul(a, b) == one && rule_mul(b, a) == one) { inv_tab[a] = b; break; }
    }
    Elem rule_add(Elem a, Elem b) const override { return add_tab[a * order + b]; }
    Elem rule_mul(Elem a, Elem b) const override { return mul_tab[a * order + b]; }
};

}  // namespace detail

class FiniteRing;
FiniteRing construct_mod(std::uint64_t n, std::size_t order_cap);

/// Immutable handle on a finite unital ring. Cheap to copy; two handles
/// denote the same ring iff they share the implementation.
class FiniteRing {
  public:
    using Elem = skewring::Elem;

    std::size_t order() const { return impl_->order; }
    Elem zero() const { return impl_->zero; }
    Elem one() const { return impl_->one; }
    RingKind kind() const { return impl_->kind; }
    const std::string& name() const { return impl_->name; }

    Elem add(Elem a, Elem b) const { return impl_->add(a, b); }
    Elem neg(Elem a) const { return impl_->neg_tab[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return impl_->mul(a, b); }

    Elem pow(Elem a, std::uint64_t n) const {
        Elem r = one();
        for (std::uint64_t i = 0; i < n; ++i) r = mul(r, a);
        return r;
    }

    /// Embeds an integer via repeated addition of 1.
    Elem from_int(std::int64_t n) const {
        Elem r = zero();
        std::uint64_t m = n >= 0 ? std::uint64_t(n) : std::uint64_t(-n);
        m %= 4 * order();  // characteristic divides the order
        for (std::uint64_t i = 0; i < m; ++i) r = add(r, one());
        return n >= 0 ? r : neg(r);
    }

    bool is_unit(Elem a) const { return impl_->inv_tab[a] != detail::RingImpl::kNoInverse; }
    std::optional<Elem> inverse(Elem a) const {
        if (!is_unit(a)) return std::nullopt;
        return impl_->inv_tab[a];
    }

    bool is_central(Elem a) const {
        for (Elem r = 0; r < order(); ++r)
            if (mul(a, r) != mul(r, a)) return false;
        return true;
    }

    bool same_as(const FiniteRing& o) const { return impl_ == o.impl_; }

    // Factories ------------------------------------------------------------

    static FiniteRing mod(std::uint64_t n, std::size_t order_cap = kDefaultOrderCap);
    static FiniteRing matrix(unsigned k, const FiniteRing& base,
                             std::size_t order_cap = kDefaultOrderCap);
    static FiniteRing product(const FiniteRing& left, const FiniteRing& right,
                              std::size_t order_cap = kDefaultOrderCap);
    static FiniteRing trunc_poly(std::uint64_t p, unsigned k,
                                 std::size_t order_cap = kDefaultOrderCap);
    static FiniteRing from_tables(std::size_t n, std::vector<Elem> add_tab,
                                  std::vector<Elem> mul_tab, Elem one_elem,
                                  std::size_t order_cap = kDefaultOrderCap);

    // Kind-specific structure accessors -------------------------------------

    struct TruncPolyInfo { std::uint64_t p; unsigned k; };
    std::optional<TruncPolyInfo> trunc_poly_info() const;

    struct QuotientInfo;
    const QuotientInfo* quotient_info() const;

    struct ProductInfo;
    const ProductInfo* product_info() const;

    struct MatrixInfo;
    const MatrixInfo* matrix_info() const;

    explicit FiniteRing(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {}

  private:
    std::shared_ptr<const detail::RingImpl> impl_;
};

struct FiniteRing::QuotientInfo {
    FiniteRing base;
    std::vector<Elem> eta;  // base element -> quotient encoding
    std::vector<Elem> rep;  // quotient encoding -> least base representative
};

struct FiniteRing::ProductInfo { FiniteRing left, right; };

struct FiniteRing::MatrixInfo { FiniteRing base; unsigned k; };

namespace detail {

struct MatrixRing final : RingImpl {
    FiniteRing::MatrixInfo info;
    unsigned k;
    std::size_t cells;

    MatrixRing(unsigned k_, FiniteRing base) : info{base, k_}, k(k_), cells(std::size_t(k_) * k_) {
        kind = RingKind::Matrix;
        std::size_t b = base.order();
        order = 1;
        for (std::size_t i = 0; i < cells; ++i) order *= b;
        zero = 0;
        // identity matrix
        std::vector<Elem> id(cells, base.zero());
        for (unsigned i = 0; i < k; ++i) id[std::size_t(i) * k + i] = base.one();
        one = encode(id);
        name = "matrix(" + std::to_string(k) + "," + base.name() + ")";
    }

    std::vector<Elem> decode(Elem e) const {
        std::vector<Elem> m(cells);
        std::size_t b = info.base.order();
        std::uint64_t v = e;
        for (std::size_t i = 0; i < cells; ++i) { m[i] = Elem(v % b); v /= b; }
        return m;
    }
    Elem encode(const std::vector<Elem>& m) const {
        std::size_t b = info.base.order();
        std::uint64_t v = 0;
        for (std::size_t i = cells; i-- > 0;) v = v * b + m[i];
        return Elem(v);
    }

    Elem rule_add(Elem a, Elem b) const override {
        auto x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < cells; ++i) x[i] = info.base.add(x[i], y[i]);
        return encode(x);
    }
    Elem rule_mul(Elem a, Elem b) const override {
        auto x = decode(a), y = decode(b);
        std::vector<Elem> z(cells, info.base.zero());
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) {
                Elem s = info.base.zero();
                for (unsigned l = 0; l < k; ++l)
                    s = info.base.add(s, info.base.mul(x[std::size_t(i) * k + l], y[std::size_t(l) * k + j]));
                z[std::size_t(i) * k + j] = s;
            }
        return encode(z);
    }
};

struct ProductRing final : RingImpl {
    FiniteRing::ProductInfo info;
    ProductRing(FiniteRing l, FiniteRing r) : info{l, r} {
        kind = RingKind::Product;
        order = l.order() * r.order();
        zero = Elem(std::uint64_t(l.zero()) * r.order() + r.zero());
        one = Elem(std::uint64_t(l.one()) * r.order() + r.one());
        name = "product(" + l.name() + "," + r.name() + ")";
    }
    Elem rule_add(Elem a, Elem b) const override {
        std::size_t m = info.right.order();
        return Elem(std::uint64_t(info.left.add(Elem(a / m), Elem(b / m))) * m +
                    info.right.add(Elem(a % m), Elem(b % m)));
    }
    Elem rule_mul(Elem a, Elem b) const override {
        std::size_t m = info.right.order();
        return Elem(std::uint64_t(info.left.mul(Elem(a / m), Elem(b / m))) * m +
                    info.right.mul(Elem(a % m), Elem(b % m)));
    }
};

struct TruncPolyRing final : RingImpl {
    std::uint64_t p;
    unsigned k;
    TruncPolyRing(std::uint64_t p_, unsigned k_) : p(p_), k(k_) {
        kind = RingKind::TruncPoly;
        order = 1;
        for (unsigned i = 0; i < k; ++i) order *= p;
        zero = 0;
        one = 1;
        name = "trunc_poly(" + std::to_string(p) + "," + std::to_string(k) + ")";
    }
    std::vector<Elem> decode(Elem e) const {
        std::vector<Elem> c(k);
        std::uint64_t v = e;
        for (unsigned i = 0; i < k; ++i) { c[i] = Elem(v % p); v /= p; }
        return c;
    }
    Elem encode(const std::vector<Elem>& c) const {
        std::uint64_t v = 0;
        for (unsigned i = k; i-- > 0;) v = v * p + c[i];
        return Elem(v);
    }
    Elem rule_add(Elem a, Elem b) const override {
        auto x = decode(a), y = decode(b);
        for (unsigned i = 0; i < k; ++i) x[i] = Elem((std::uint64_t(x[i]) + y[i]) % p);
        return encode(x);
    }
    Elem rule_mul(Elem a, Elem b) const override {
        auto x = decode(a), y = decode(b);
        std::vector<Elem> z(k, 0);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; i + j < k; ++j)
                z[i + j] = Elem((z[i + j] + std::uint64_t(x[i]) * y[j]) % p);
        return encode(z);
    }
};

struct QuotientRing final : RingImpl {
    FiniteRing::QuotientInfo info;
    QuotientRing(FiniteRing base, std::vector<Elem> eta, std::vector<Elem> rep)
        : info{base, std::move(eta), std::move(rep)} {
        kind = RingKind::Quotient;
        order = info.rep.size();
        zero = info.eta[base.zero()];
        one = info.eta[base.one()];
        name = "quotient(" + base.name() + ")";
    }
    Elem rule_add(Elem a, Elem b) const override {
        return info.eta[info.base.add(info.rep[a], info.rep[b])];
    }
    Elem rule_mul(Elem a, Elem b) const override {
        return info.eta[info.base.mul(info.rep[a], info.rep[b])];
    }
};

inline void check_order_cap(std::uint64_t order, std::size_t cap) {
    if (order > cap)
        throw ConfigError("ring order " + std::to_string(order) + " exceeds the cap " +
                          std::to_string(cap));
    if (order < 2) throw ConfigError("ring must have at least two elements");
}

}  // namespace detail

/// Exhaustive ring-axiom check for order <= 64, 1000 sampled triples above.
/// Throws CounterexampleError on the first violation.
inline void validate_ring_axioms(const FiniteRing& R) {
    const std::size_t n = R.order();
    if (R.one() == R.zero()) throw ConfigError("ring is trivial: one == zero");
    auto check_triple = [&](Elem a, Elem b, Elem c) {
        if (R.add(a, b) != R.add(b, a))
            throw CounterexampleError("additive commutativity", a, b, R.add(a, b), R.add(b, a));
        Elem l = R.add(R.add(a, b), c), r = R.add(a, R.add(b, c));
        if (l != r) throw CounterexampleError("additive associativity", a, b, l, r);
        l = R.mul(R.mul(a, b), c); r = R.mul(a, R.mul(b, c));
        if (l != r) throw CounterexampleError("multiplicative associativity", a, b, l, r);
        l = R.mul(a, R.add(b, c)); r = R.add(R.mul(a, b), R.mul(a, c));
        if (l != r) throw CounterexampleError("left distributivity", a, b, l, r);
        l = R.mul(R.add(a, b), c); r = R.add(R.mul(a, c), R.mul(b, c));
        if (l != r) throw CounterexampleError("right distributivity", a, b, l, r);
    };
    for (Elem a = 0; a < n; ++a) {
        if (R.add(a, R.zero()) != a)
            throw CounterexampleError("additive identity", a, R.zero(), R.add(a, R.zero()), a);
        if (R.mul(a, R.one()) != a || R.mul(R.one(), a) != a)
            throw CounterexampleError("multiplicative identity", a, R.one(), R.mul(a, R.one()), a);
        if (R.add(a, R.neg(a)) != R.zero())
            throw CounterexampleError("additive inverse", a, R.neg(a), R.add(a, R.neg(a)), R.zero());
    }
    if (n <= 64) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eed0000u ^ n);
        std::uniform_int_distribution<Elem> dist(0, Elem(n - 1));
        for (int i = 0; i < 1000; ++i) check_triple(dist(rng), dist(rng), dist(rng));
    }
}

namespace detail {

template <class Impl, class... Args>
FiniteRing finish_ring(Args&&... args) {
    auto impl = std::make_shared<Impl>(std::forward<Args>(args)...);
    impl->materialize();
    FiniteRing ring{std::shared_ptr<const RingImpl>(impl)};
    validate_ring_axioms(ring);
    return ring;
}

}  // namespace detail

inline FiniteRing FiniteRing::mod(std::uint64_t n, std::size_t order_cap) {
    detail::check_order_cap(n, order_cap);
    return detail::finish_ring<detail::ModRing>(n);
}

inline FiniteRing FiniteRing::matrix(unsigned k, const FiniteRing& base, std::size_t order_cap) {
    if (k < 1) throw ConfigError("matrix ring needs k >= 1");
    std::uint64_t ord = 1;
    for (unsigned i = 0; i < k * k; ++i) {
        ord *= base.order();
        detail::check_order_cap(ord, order_cap);
    }
    return detail::finish_ring<detail::MatrixRing>(k, base);
}

inline FiniteRing FiniteRing::product(const FiniteRing& left, const FiniteRing& right,
                                      std::size_t order_cap) {
    detail::check_order_cap(std::uint64_t(left.order()) * right.order(), order_cap);
    return detail::finish_ring<detail::ProductRing>(left, right);
}

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline FiniteRing FiniteRing::trunc_poly(std::uint64_t p, unsigned k, std::size_t order_cap) {
    if (!is_prime_u64(p)) throw ConfigError("trunc_poly modulus p must be prime");
    if (k < 1) throw ConfigError("trunc_poly needs k >= 1");
    std::uint64_t ord = 1;
    for (unsigned i = 0; i < k; ++i) {
        ord *= p;
        detail::check_order_cap(ord, order_cap);
    }
    return detail::finish_ring<detail::TruncPolyRing>(p, k);
}

inline FiniteRing FiniteRing::from_tables(std::size_t n, std::vector<Elem> add_tab,
                                          std::vector<Elem> mul_tab, Elem one_elem,
                                          std::size_t order_cap) {
    detail::check_order_cap(n, order_cap);
    if (add_tab.size() != n * n || mul_tab.size() != n * n)
        throw ConfigError("table ring needs order*order add and mul tables");
    for (Elem v : add_tab)
        if (v >= n) throw ConfigError("add table entry out of range");
    for (Elem v : mul_tab)
        if (v >= n) throw ConfigError("mul table entry out of range");
    if (one_elem >= n) throw ConfigError("one out of range");
    auto impl = std::make_shared<detail::TableRing>(n, std::move(add_tab), std::move(mul_tab), one_elem);
    FiniteRing ring{std::shared_ptr<const detail::RingImpl>(impl)};
    validate_ring_axioms(ring);
    return ring;
}

inline std::optional<FiniteRing::TruncPolyInfo> FiniteRing::trunc_poly_info() const {
    if (auto* p = dynamic_cast<const detail::TruncPolyRing*>(impl_.get()))
        return TruncPolyInfo{p->p, p->k};
    return std::nullopt;
}

inline const FiniteRing::QuotientInfo* FiniteRing::quotient_info() const {
    if (auto* p = dynamic_cast<const detail::QuotientRing*>(impl_.get())) return &p->info;
    return nullptr;
}

inline const FiniteRing::ProductInfo* FiniteRing::product_info() const {
    if (auto* p = dynamic_cast<const detail::ProductRing*>(impl_.get())) return &p->info;
    return nullptr;
}

inline const FiniteRing::MatrixInfo* FiniteRing::matrix_info() const {
    if (auto* p = dynamic_cast<const detail::MatrixRing*>(impl_.get())) return &p->info;
    return nullptr;
}

}  // namespace skewring
