#pragma once

// The free skew extension R[X;G,D]: polynomials in noncommuting variables
// over a finite ring, kept in the canonical normal form of a free left
// R-module on the word basis, with multiplication driven by the defining
// relation  x r = sigma_x(r) x + delta_x(r).

#include <cctype>
#include <concepts>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "skewring/finite_ring.hpp"
#include "skewring/ring_map.hpp"
#include "skewring/word.hpp"

namespace skewring {

struct SkewContextData {
    FiniteRing ring;
    std::vector<std::string> variables;
    std::vector<RingMap> sigma;   // validated endomorphisms
    std::vector<RingMap> delta;   // validated sigma_x-derivations
    bool automorphic = false;     // every sigma_x an automorphism
    std::size_t degree_cap = 8;   // hard bound on any normal-form degree
};

using SkewContext = std::shared_ptr<const SkewContextData>;

/// Bundles validated per-variable maps into an immutable context. The maps
/// must already carry Endomorphism/Automorphism resp. SigmaDerivation tags.
inline SkewContext make_context(FiniteRing ring, std::vector<std::string> variables,
                                std::vector<RingMap> sigma, std::vector<RingMap> delta,
                                std::size_t degree_cap = 8) {
    if (variables.empty()) throw ConfigError("context needs at least one variable");
    if (sigma.size() != variables.size() || delta.size() != variables.size())
        throw ConfigError("sigma/delta lists must match the variable list");
    bool automorphic = true;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (!sigma[i].ring().same_as(ring) || !delta[i].ring().same_as(ring))
            throw ConfigError("map over a different ring in context");
        if (!sigma[i].is_endomorphism())
            throw ConfigError("sigma for variable '" + variables[i] + "' is not validated");
        if (!delta[i].is_sigma_derivation())
            throw ConfigError("delta for variable '" + variables[i] + "' is not validated");
        if (!delta[i].sigma().same_table(sigma[i]))
            throw ConfigError("delta for variable '" + variables[i] +
                              "' was validated against a different sigma");
        automorphic = automorphic && sigma[i].is_automorphism();
    }
    return std::make_shared<SkewContextData>(SkewContextData{
        std::move(ring), std::move(variables), std::move(sigma), std::move(delta), automorphic,
        degree_cap});
}

/// Canonical normal form: a finite map word -> nonzero left coefficient,
/// ordered leading term first.
class SkewPoly {
  public:
    using TermMap = std::map<Word, Elem, PrecDescending>;

    explicit SkewPoly(SkewContext ctx) : ctx_(std::move(ctx)) {}
    SkewPoly(SkewContext ctx, TermMap terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
        prune();
    }

    static SkewPoly zero(SkewContext ctx) { return SkewPoly(std::move(ctx)); }
    static SkewPoly constant(SkewContext ctx, Elem r) {
        SkewPoly p(std::move(ctx));
        p.add_term(Word::empty(), r);
        return p;
    }
    static SkewPoly one(SkewContext ctx) {
        Elem e = ctx->ring.one();
        return constant(std::move(ctx), e);
    }
    static SkewPoly monomial(SkewContext ctx, Elem r, Word w) {
        SkewPoly p(std::move(ctx));
        p.add_term(std::move(w), r);
        return p;
    }
    static SkewPoly variable(SkewContext ctx, Letter i) {
        if (i >= ctx->variables.size()) throw DomainError("variable index out of range");
        Elem e = ctx->ring.one();
        return monomial(std::move(ctx), e, Word::single(i));
    }

    const SkewContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Degree of the polynomial; the zero polynomial has no degree.
    std::size_t degree() const {
        if (terms_.empty()) throw DomainError("degree of the zero polynomial");
        return terms_.begin()->first.degree();
    }

    Elem coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? ctx_->ring.zero() : it->second;
    }

    /// Adds r*w into the normal form (pruning zeros).
    void add_term(Word w, Elem r) {
        const FiniteRing& R = ctx_->ring;
        if (r == R.zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(w), r);
        if (!inserted) {
            it->second = R.add(it->second, r);
            if (it->second == R.zero()) terms_.erase(it);
        }
    }

    struct Leading;

    /// Unique decomposition f = coeff*word + tail with every word of tail
    /// strictly below word.
    Leading leading() const;

    bool operator==(const SkewPoly& o) const { return terms_ == o.terms_; }

    SkewPoly operator-() const {
        SkewPoly out(ctx_);
        for (const auto& [w, r] : terms_) out.terms_.emplace(w, ctx_->ring.neg(r));
        return out;
    }

    SkewPoly operator+(const SkewPoly& o) const {
        require_same_context(o);
        SkewPoly out = *this;
        for (const auto& [w, r] : o.terms_) out.add_term(w, r);
        return out;
    }
    SkewPoly operator-(const SkewPoly& o) const { return *this + (-o); }

    /// Left scalar multiplication r*f.
    SkewPoly scaled_left(Elem r) const {
        SkewPoly out(ctx_);
        for (const auto& [w, c] : terms_) out.add_term(w, ctx_->ring.mul(r, c));
        return out;
    }

    SkewPoly operator*(const SkewPoly& o) const;

    void require_same_context(const SkewPoly& o) const {
        if (ctx_ != o.ctx_) throw DomainError("polynomials from different contexts");
    }

  private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == ctx_->ring.zero()) ? terms_.erase(it) : std::next(it);
    }

    SkewContext ctx_;
    TermMap terms_;
};

struct SkewPoly::Leading {
    Elem coeff;
    Word word;
    SkewPoly tail;
};

inline SkewPoly::Leading SkewPoly::leading() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    auto it = terms_.begin();
    SkewPoly tail(ctx_);
    for (auto jt = std::next(it); jt != terms_.end(); ++jt) tail.terms_.insert(*jt);
    return Leading{it->second, it->first, std::move(tail)};
}

namespace detail {

/// Normal form of w * r as a list of (word, coefficient) pairs, obtained by
/// pushing the letters of w through r right to left with the defining
/// relation. Every produced word has degree <= deg w.
inline void push_word_through(const SkewContext& ctx, const Word& w, Elem r,
                              std::vector<std::pair<Word, Elem>>& out) {
    const FiniteRing& R = ctx->ring;
    out.clear();
    if (r == R.zero()) return;
    out.emplace_back(Word::empty(), r);
    std::vector<std::pair<Word, Elem>> next;
    const auto& letters = w.letters();
    for (std::size_t pos = letters.size(); pos-- > 0;) {
        Letter x = letters[pos];
        next.clear();
        for (const auto& [u, c] : out) {
            Elem sc = ctx->sigma[x](c);
            if (sc != R.zero()) {
                std::vector<Letter> xu;
                xu.reserve(u.degree() + 1);
                xu.push_back(x);
                xu.insert(xu.end(), u.letters().begin(), u.letters().end());
                next.emplace_back(Word(std::move(xu)), sc);
            }
            Elem dc = ctx->delta[x](c);
            if (dc != R.zero()) next.emplace_back(u, dc);
        }
        // merge duplicates
        out.clear();
        std::map<Word, Elem, PrecDescending> merged;
        for (auto& [u, c] : next) {
            auto [it, ins] = merged.try_emplace(u, c);
            if (!ins) {
                it->second = R.add(it->second, c);
                if (it->second == R.zero()) merged.erase(it);
            }
        }
        out.assign(merged.begin(), merged.end());
    }
}

}  // namespace detail

inline SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    require_same_context(o);
    const FiniteRing& R = ctx_->ring;
    if (!terms_.empty() && !o.terms_.empty()) {
        std::size_t bound = terms_.begin()->first.degree() + o.terms_.begin()->first.degree();
        if (bound > ctx_->degree_cap)
            throw DegreeCapError("product degree " + std::to_string(bound) +
                                 " exceeds the cap " + std::to_string(ctx_->degree_cap));
    }
    SkewPoly out(ctx_);
    std::vector<std::pair<Word, Elem>> pushed;
    for (const auto& [wf, rf] : terms_)
        for (const auto& [wg, rg] : o.terms_) {
            detail::push_word_through(ctx_, wf, rg, pushed);
            for (const auto& [u, c] : pushed) out.add_term(u.concat(wg), R.mul(rf, c));
        }
    return out;
}

/// The composed automorphism by which the word w moves a constant past
/// itself: w s = pi(s) w + lower terms. pi(empty) = id.
inline RingMap pi_of_word(const SkewContext& ctx, const Word& w) {
    RingMap pi = RingMap::identity(ctx->ring);
    for (std::size_t i = w.degree(); i-- > 0;) {
        const RingMap& s = ctx->sigma[w.letters()[i]];
        if (!s.is_automorphism())
            throw DomainError("pi_of_word requires an automorphic context");
        pi = compose(s, pi);  // apply the rightmost letter first
    }
    return RingMap(ctx->ring, pi.table(), MapTag::Automorphism);
}

// ------------------------------------------------------------------------
// Operator representation: the endomorphism of the additive group of the
// free module R<X> determined by f, used as an independent multiplication
// oracle. Module elements share the SkewPoly term-map representation but
// are combined by the hat-operator rule only.

/// xhat applied to a module element: sum of sigma_x(r) xW + delta_x(r) W.
inline SkewPoly hat_apply_var(const SkewContext& ctx, Letter x, const SkewPoly& g) {
    const FiniteRing& R = ctx->ring;
    SkewPoly out(ctx);
    for (const auto& [w, r] : g.terms()) {
        if (w.degree() + 1 > ctx->degree_cap)
            throw DegreeCapError("operator application exceeds the degree cap");
        out.add_term(Word::single(x).concat(w), ctx->sigma[x](r));
        out.add_term(w, ctx->delta[x](r));
        (void)R;
    }
    return out;
}

/// rep(f)(g) = sum_W r_W * What(g) with What the letterwise hat composition.
inline SkewPoly operator_rep(const SkewContext& ctx, const SkewPoly& f, const SkewPoly& g) {
    f.require_same_context(g);
    SkewPoly out(ctx);
    for (const auto& [w, r] : f.terms()) {
        SkewPoly acc = g;
        for (std::size_t i = w.degree(); i-- > 0;) acc = hat_apply_var(ctx, w.letters()[i], acc);
        out = out + acc.scaled_left(r);
    }
    return out;
}

// ------------------------------------------------------------------------
// Universal property: evaluation homomorphism into any ring-like target.

template <class T>
concept RingLike = requires(const T& t, typename T::Elem a) {
    { t.add(a, a) } -> std::convertible_to<typename T::Elem>;
    { t.mul(a, a) } -> std::convertible_to<typename T::Elem>;
    { t.zero() } -> std::convertible_to<typename T::Elem>;
    { t.one() } -> std::convertible_to<typename T::Elem>;
};

/// SkewPoly arithmetic exposed through the ring-like interface, so a skew
/// polynomial ring can itself be an evaluation target.
struct PolyRingTarget {
    using Elem = SkewPoly;
    SkewContext ctx;
    SkewPoly add(const SkewPoly& a, const SkewPoly& b) const { return a + b; }
    SkewPoly mul(const SkewPoly& a, const SkewPoly& b) const { return a * b; }
    SkewPoly zero() const { return SkewPoly::zero(ctx); }
    SkewPoly one() const { return SkewPoly::one(ctx); }
};

/// FiniteRing already satisfies RingLike via its member functions.
static_assert(RingLike<FiniteRing>);
static_assert(RingLike<PolyRingTarget>);

template <RingLike T, class Psi>
struct EvalHom {
    SkewContext ctx;
    T target;
    Psi psi;                              // R -> T, a ring homomorphism
    std::vector<typename T::Elem> phi;    // per-variable images

    typename T::Elem operator()(const SkewPoly& f) const {
        typename T::Elem acc = target.zero();
        for (const auto& [w, r] : f.terms()) {
            typename T::Elem m = target.one();
            for (Letter x : w.letters()) m = target.mul(m, phi[x]);
            acc = target.add(acc, target.mul(psi(r), m));
        }
        return acc;
    }
};

/// Builds the evaluation homomorphism after exhaustively checking the
/// compatibility relation phi(x) psi(r) = psi(sigma_x(r)) phi(x) + psi(delta_x(r))
/// for all x and r. Throws DomainError naming the witness on violation.
template <RingLike T, class Psi>
EvalHom<T, Psi> evaluate_hom(SkewContext ctx, T target, Psi psi,
                             std::vector<typename T::Elem> phi) {
    if (phi.size() != ctx->variables.size())
        throw ConfigError("evaluate_hom: one image per variable required");
    const FiniteRing& R = ctx->ring;
    for (std::size_t x = 0; x < phi.size(); ++x)
        for (Elem r = 0; r < R.order(); ++r) {
            auto lhs = target.mul(phi[x], psi(r));
            auto rhs = target.add(target.mul(psi(ctx->sigma[x](r)), phi[x]),
                                  psi(ctx->delta[x](r)));
            if (!(lhs == rhs))
                throw DomainError("evaluate_hom: compatibility fails at variable " +
                                  ctx->variables[x] + ", r=" + std::to_string(r));
        }
    return EvalHom<T, Psi>{std::move(ctx), std::move(target), std::move(psi), std::move(phi)};
}

// ------------------------------------------------------------------------

/// If a^k = 0 for some k <= bound, returns b = -(a + a^2 + ... + a^{k-1})
/// and asserts a + b = ab = ba exactly; nullopt when no nilpotency shows up
/// within the bound.
inline std::optional<SkewPoly> quasi_inverse_nilpotent(const SkewPoly& a, unsigned bound) {
    const SkewContext& ctx = a.context();
    if (a.is_zero()) return SkewPoly::zero(ctx);
    SkewPoly power = a;                      // a^k
    SkewPoly partial = SkewPoly::zero(ctx);  // a + ... + a^{k-1}
    for (unsigned k = 1; k <= bound; ++k) {
        if (power.is_zero()) {
            SkewPoly b = -partial;
            SkewPoly sum = a + b, ab = a * b, ba = b * a;
            if (!(sum == ab && ab == ba))
                throw Error("quasi-inverse identities failed for a nilpotent element");
            return b;
        }
        partial = partial + power;
        if (!power.is_zero() && !a.is_zero() &&
            power.degree() + a.degree() > ctx->degree_cap)
            return std::nullopt;  // cannot certify within the cap
        power = power * a;
    }
    return std::nullopt;
}

// ------------------------------------------------------------------------
// Text format: "3*xy + 1*x + 2*1", coefficients as canonical encodings,
// terms in descending order.

inline std::string to_string(const SkewPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, r] : f.terms()) {
        if (!first) out << " + ";
        out << r << "*" << word_to_string(w, f.context()->variables);
        first = false;
    }
    return out.str();
}

inline SkewPoly poly_from_string(const SkewContext& ctx, const std::string& text) {
    SkewPoly out(ctx);
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "0") return out;
    std::size_t pos = 0;
    while (pos < trimmed.size()) {
        std::size_t star = trimmed.find('*', pos);
        if (star == std::string::npos)
            throw DomainError("polynomial term missing '*': " + text);
        unsigned long coeff = 0;
        try {
            coeff = std::stoul(trimmed.substr(pos, star - pos));
        } catch (const std::exception&) {
            throw DomainError("bad coefficient in polynomial: " + text);
        }
        if (coeff >= ctx->ring.order())
            throw DomainError("coefficient encoding out of range: " + std::to_string(coeff));
        std::size_t plus = trimmed.find('+', star);
        std::string word_text = trimmed.substr(star + 1, plus == std::string::npos
                                                             ? std::string::npos
                                                             : plus - star - 1);
        out.add_term(word_from_string(word_text, ctx->variables), Elem(coeff));
        pos = plus == std::string::npos ? trimmed.size() : plus + 1;
    }
    return out;
}

}  // namespace skewring
