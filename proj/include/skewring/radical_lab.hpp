#pragma once

// Mechanized verification of the radical-theoretic machinery: the
// annihilator lemma, the leading-coefficient ideal with its stability
// properties, nilpotence of radical extensions, the q-skew product
// identity, and the full semiprimitivity proof trace with its exhaustive
// bounded quasi-inverse search.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewring/ideal.hpp"
#include "skewring/report.hpp"
#include "skewring/ring_map.hpp"
#include "skewring/skew_poly.hpp"
#include "skewring/word.hpp"

namespace skewring {

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

inline std::uint64_t search_cap_from_env() {
    if (const char* v = std::getenv("SKEWRING_MAX_SEARCH")) {
        char* end = nullptr;
        auto n = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && n > 0) return n;
    }
    return kDefaultSearchCap;
}

namespace detail {

inline std::string elem_set_to_string(std::span<const Elem> s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

inline bool subset_of(std::span<const Elem> a, const std::vector<char>& mask) {
    for (Elem e : a)
        if (!mask[e]) return false;
    return true;
}

inline std::vector<char> set_to_mask(std::size_t order, std::span<const Elem> s) {
    std::vector<char> m(order, 0);
    for (Elem e : s) m[e] = 1;
    return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lemma: for c regular in an ideal I of a semiprime ring, both annihilators
// of c equal M = ann(I) and the coset of c is regular in R/M.

inline Report verify_lemma1(const FiniteRing& R, const Ideal& I, Elem c) {
    Report rep;
    if (!is_semiprime(R)) {
        rep.fail("lemma1.precondition.semiprime", "base ring is semiprime",
                 "prime radical is nonzero");
        return rep;
    }
    if (!I.contains(c)) {
        rep.fail("lemma1.precondition.membership", "c lies in I", "c=" + std::to_string(c));
        return rep;
    }
    if (!is_regular_in(R, c, I)) {
        rep.fail("lemma1.precondition.regular_in_I", "c is regular in I",
                 "c=" + std::to_string(c) + " annihilates a nonzero element of I");
        return rep;
    }
    auto annI = annihilators(R, I.elements());
    rep.check("lemma1.ann_coincide", "left and right annihilators of I coincide",
              annI.left == annI.right,
              "l.ann=" + detail::elem_set_to_string(annI.left) +
                  " r.ann=" + detail::elem_set_to_string(annI.right));
    const std::vector<Elem>& M = annI.both;
    // I and M meet only in zero
    bool disjoint = true;
    Elem clash = R.zero();
    for (Elem m : M)
        if (m != R.zero() && I.contains(m)) { disjoint = false; clash = m; break; }
    rep.check("lemma1.zero_intersection", "I and ann(I) have zero intersection", disjoint,
              "shared element " + std::to_string(clash));
    // annihilators of c itself
    auto annC = annihilators(R, std::span<const Elem>(&c, 1));
    rep.check("lemma1.lann_c", "l.ann(c) = ann(I)", annC.left == M,
              "l.ann(c)=" + detail::elem_set_to_string(annC.left));
    rep.check("lemma1.rann_c", "r.ann(c) = ann(I)", annC.right == M,
              "r.ann(c)=" + detail::elem_set_to_string(annC.right));
    // regularity of the coset of c in R/M
    Ideal Mideal(R, M);
    FiniteRing Rq = make_quotient(R, Mideal);
    const auto& qi = *Rq.quotient_info();
    rep.check("lemma1.quotient_regular", "the coset of c is regular in R/M",
              is_regular(Rq, qi.eta[c]), "eta(c)=" + std::to_string(qi.eta[c]));
    return rep;
}

// ---------------------------------------------------------------------------
// Echelonized additive span of polynomials, keyed by leading word. For every
// word it keeps the full group of achievable leading coefficients, each with
// a witness polynomial from the span. Cancellations between witnesses feed
// back as new insertions, so leading coefficients of arbitrary sums are
// captured.

class LeadingSpan {
  public:
    using Row = std::map<Elem, SkewPoly>;

    explicit LeadingSpan(SkewContext ctx) : ctx_(std::move(ctx)) {}

    void insert(const SkewPoly& f) {
        std::vector<SkewPoly> pending{f};
        while (!pending.empty()) {
            SkewPoly g = std::move(pending.back());
            pending.pop_back();
            reduce_and_absorb(std::move(g), pending);
        }
    }

    /// True iff f lies in the current span.
    bool contains(SkewPoly f) const {
        const FiniteRing& R = ctx_->ring;
        while (!f.is_zero()) {
            auto lead = f.leading();
            auto rit = rows_.find(lead.word);
            if (rit == rows_.end()) return false;
            auto wit = rit->second.find(lead.coeff);
            if (wit == rit->second.end()) return false;
            f = f - wit->second;
        }
        return true;
    }

    const std::map<Word, Row, PrecDescending>& rows() const { return rows_; }

    /// All achieved leading coefficients with one witness each.
    std::vector<std::pair<Elem, SkewPoly>> coefficient_generators() const {
        std::vector<std::pair<Elem, SkewPoly>> out;
        for (const auto& [w, row] : rows_)
            for (const auto& [c, p] : row) out.emplace_back(c, p);
        return out;
    }

    /// Additive group generated by all leading coefficients.
    std::vector<Elem> leading_coeff_group() const {
        const FiniteRing& R = ctx_->ring;
        std::vector<char> mask(R.order(), 0);
        for (const auto& [w, row] : rows_)
            for (const auto& [c, p] : row) mask[c] = 1;
        return detail::mask_to_sorted(detail::additive_closure_mask(R, std::move(mask)));
    }

    /// Expresses a target element of the leading-coefficient group as a sum
    /// of leading coefficients of span elements (shortest sum, BFS).
    std::optional<std::vector<std::pair<Elem, SkewPoly>>> decompose(Elem target) const {
        const FiniteRing& R = ctx_->ring;
        auto gens = coefficient_generators();
        std::vector<int> prev_state(R.order(), -1);
        std::vector<int> prev_gen(R.order(), -1);
        std::vector<char> seen(R.order(), 0);
        std::vector<Elem> queue{R.zero()};
        seen[R.zero()] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Elem s = queue[qi];
            if (s == target) break;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                Elem t = R.add(s, gens[g].first);
                if (!seen[t]) {
                    seen[t] = 1;
                    prev_state[t] = int(s);
                    prev_gen[t] = int(g);
                    queue.push_back(t);
                }
            }
        }
        if (!seen[target]) return std::nullopt;
        std::vector<std::pair<Elem, SkewPoly>> out;
        for (Elem s = target; s != R.zero();) {
            out.push_back(gens[prev_gen[s]]);
            s = Elem(prev_state[s]);
        }
        std::reverse(out.begin(), out.end());
        if (target == R.zero()) out.clear();
        return out;
    }

    /// A cheap signature that grows monotonically with the staircase.
    std::size_t staircase_size() const {
        std::size_t n = 0;
        for (const auto& [w, row] : rows_) n += row.size();
        return n;
    }

  private:
    void reduce_and_absorb(SkewPoly g, std::vector<SkewPoly>& pending) {
        const FiniteRing& R = ctx_->ring;
        while (!g.is_zero()) {
            auto lead = g.leading();
            Row& row = rows_[lead.word];
            auto it = row.find(lead.coeff);
            if (it == row.end()) {
                grow_row(row, lead.coeff, g, pending);
                it = row.find(lead.coeff);
            }
            g = g - it->second;
        }
    }

    /// Extends the coefficient group at one word by a new generator,
    /// closing under addition and negation. Sums that cancel the leading
    /// coefficient produce span elements of smaller leading word; those are
    /// queued for re-insertion.
    void grow_row(Row& row, Elem c, const SkewPoly& witness, std::vector<SkewPoly>& pending) {
        const FiniteRing& R = ctx_->ring;
        std::vector<std::pair<Elem, SkewPoly>> queue{{c, witness}};
        row.emplace(c, witness);
        while (!queue.empty()) {
            auto [a, pa] = std::move(queue.back());
            queue.pop_back();
            auto offer = [&](Elem v, SkewPoly pv) {
                if (v == R.zero()) {
                    if (!pv.is_zero()) pending.push_back(std::move(pv));
                    return;
                }
                if (!row.count(v)) {
                    row.emplace(v, pv);
                    queue.emplace_back(v, std::move(pv));
                }
            };
            offer(R.neg(a), -pa);
            std::vector<std::pair<Elem, SkewPoly>> snapshot(row.begin(), row.end());
            for (const auto& [b, pb] : snapshot) offer(R.add(a, b), pa + pb);
        }
    }

    SkewContext ctx_;
    std::map<Word, Row, PrecDescending> rows_;
};

// ---------------------------------------------------------------------------
// Leading-coefficient ideal of a finitely generated ideal of the skew
// extension, computed at a degree bound with a stabilization window.

struct LeadingCoeffReport {
    std::vector<SkewPoly> generators;
    std::size_t degree_bound = 0;
    std::size_t window = 0;
    std::vector<Elem> I;                 // additive group of leading coefficients
    bool is_ideal = false;
    std::vector<char> sigma_stable;      // per variable: sigma_x(I) in I
    std::vector<Elem> M;                 // ann(I)
    std::vector<char> M_sigma_fixed;     // per variable: sigma_x(M) = M
    std::vector<char> M_delta_stable;    // per variable: delta_x(M) in M
    bool stabilized = false;
    Report checks;
    std::shared_ptr<LeadingSpan> span;   // span at the base degree bound
};

namespace detail {

/// Span of the two-sided ideal generated by gens, truncated at degree d:
/// closure under r*f, f*r, x*f, f*x with results beyond degree d discarded.
inline std::shared_ptr<LeadingSpan> ideal_span_at_degree(const SkewContext& ctx,
                                                         const std::vector<SkewPoly>& gens,
                                                         std::size_t d) {
    auto span = std::make_shared<LeadingSpan>(ctx);
    for (const auto& g : gens)
        if (!g.is_zero()) {
            if (g.degree() > d) throw DomainError("generator degree exceeds the closure bound");
            span->insert(g);
        }
    const FiniteRing& R = ctx->ring;
    std::size_t before = 0;
    do {
        before = span->staircase_size();
        std::vector<SkewPoly> batch;
        for (const auto& [w, row] : span->rows())
            for (const auto& [c, p] : row) batch.push_back(p);
        for (const SkewPoly& p : batch) {
            std::size_t pd = p.degree();
            for (Elem r = 0; r < R.order(); ++r) {
                span->insert(p.scaled_left(r));
                span->insert(p * SkewPoly::constant(ctx, r));
            }
            if (pd + 1 <= d) {
                for (Letter x = 0; x < ctx->variables.size(); ++x) {
                    span->insert(SkewPoly::variable(ctx, x) * p);
                    span->insert(p * SkewPoly::variable(ctx, x));
                }
            }
        }
    } while (span->staircase_size() != before);
    return span;
}

}  // namespace detail

inline LeadingCoeffReport leading_coeff_group(const SkewContext& ctx,
                                              const std::vector<SkewPoly>& gens, std::size_t d,
                                              std::size_t window) {
    if (!ctx->automorphic)
        throw DomainError("leading_coeff_group requires an automorphic context");
    bool any_nonzero = false;
    for (const auto& g : gens) any_nonzero = any_nonzero || !g.is_zero();
    if (gens.empty() || !any_nonzero) throw DomainError("leading_coeff_group: zero ideal");
    if (d + window > ctx->degree_cap)
        throw DegreeCapError("closure degree plus window exceeds the degree cap");

    const FiniteRing& R = ctx->ring;
    LeadingCoeffReport out;
    out.generators = gens;
    out.degree_bound = d;
    out.window = window;
    out.span = detail::ideal_span_at_degree(ctx, gens, d);
    out.I = out.span->leading_coeff_group();

    auto wider = detail::ideal_span_at_degree(ctx, gens, d + window);
    out.stabilized = (out.I == wider->leading_coeff_group());
    out.checks.check("prop2.stabilized",
                     "leading-coefficient group is stable from degree d to d+k",
                     out.stabilized, "grows beyond the bound");

    auto maskI = detail::set_to_mask(R.order(), out.I);
    // (1) two-sided ideal
    out.is_ideal = true;
    std::string wit;
    for (Elem a : out.I) {
        for (Elem b : out.I)
            if (!maskI[R.add(a, b)]) { out.is_ideal = false; wit = "a+b"; break; }
        for (Elem r = 0; r < R.order() && out.is_ideal; ++r) {
            if (!maskI[R.mul(r, a)]) { out.is_ideal = false; wit = "ra"; }
            if (!maskI[R.mul(a, r)]) { out.is_ideal = false; wit = "ar"; }
        }
        if (!out.is_ideal) break;
    }
    out.checks.check("prop2.ideal", "leading coefficients generate a two-sided ideal of R",
                     out.is_ideal, wit);
    // (2) sigma stability of I
    out.sigma_stable.resize(ctx->variables.size(), 1);
    for (Letter x = 0; x < ctx->variables.size(); ++x) {
        bool ok = true;
        for (Elem a : out.I)
            if (!maskI[ctx->sigma[x](a)]) { ok = false; break; }
        out.sigma_stable[x] = ok;
        out.checks.check("prop2.sigma_I." + ctx->variables[x],
                         "sigma_" + ctx->variables[x] + "(I) contained in I", ok, "");
    }
    // (3) M = ann(I): sigma_x(M) = M, delta_x(M) in M
    out.M = annihilators(R, out.I).both;
    auto maskM = detail::set_to_mask(R.order(), out.M);
    out.M_sigma_fixed.resize(ctx->variables.size(), 1);
    out.M_delta_stable.resize(ctx->variables.size(), 1);
    for (Letter x = 0; x < ctx->variables.size(); ++x) {
        bool fixed = true, dstable = true;
        std::vector<char> image(R.order(), 0);
        for (Elem m : out.M) {
            if (!maskM[ctx->sigma[x](m)]) fixed = false;
            image[ctx->sigma[x](m)] = 1;
            if (!maskM[ctx->delta[x](m)]) dstable = false;
        }
        if (fixed)  // containment plus equal size means equality for automorphisms
            fixed = detail::mask_to_sorted(image) == out.M;
        out.M_sigma_fixed[x] = fixed;
        out.M_delta_stable[x] = dstable;
        out.checks.check("prop2.sigma_M." + ctx->variables[x],
                         "sigma_" + ctx->variables[x] + "(M) = M for M = ann(I)", fixed, "");
        out.checks.check("prop2.delta_M." + ctx->variables[x],
                         "delta_" + ctx->variables[x] + "(M) contained in M", dstable, "");
    }
    return out;
}

/// Stabilization index of the descending chain ann(sigma^i(I)); also
/// re-derives sigma(ann(I)) = ann(I) from the stabilized chain.
struct AnnChainResult {
    unsigned index = 0;
    bool sigma_fixes_ann = false;
};

inline AnnChainResult annihilator_chain_stabilization(const FiniteRing& R,
                                                      std::span<const Elem> I,
                                                      const RingMap& sigma) {
    if (!sigma.is_automorphism())
        throw DomainError("annihilator chain needs an automorphism");
    std::vector<Elem> cur(I.begin(), I.end());
    std::sort(cur.begin(), cur.end());
    auto ann_prev = annihilators(R, cur).both;
    AnnChainResult res;
    for (unsigned i = 1; i <= R.order() + 1; ++i) {
        for (Elem& e : cur) e = sigma(e);
        std::sort(cur.begin(), cur.end());
        auto ann_cur = annihilators(R, cur).both;
        if (ann_cur == ann_prev) {
            res.index = i - 1;
            break;
        }
        ann_prev = std::move(ann_cur);
    }
    std::vector<Elem> base(I.begin(), I.end());
    auto annI = annihilators(R, base).both;
    std::vector<Elem> image;
    for (Elem m : annI) image.push_back(sigma(m));
    std::sort(image.begin(), image.end());
    res.sigma_fixes_ann = image == annI;
    return res;
}

// ---------------------------------------------------------------------------
// Nilpotence of the radical extension: every product of n polynomials with
// coefficients in the prime radical vanishes, given the stability
// hypotheses.

inline Report verify_radical_extension_nilpotent(const SkewContext& ctx, unsigned n_expected,
                                                 std::size_t sample, std::uint64_t seed = 1) {
    Report rep;
    const FiniteRing& R = ctx->ring;
    Ideal P = prime_radical(R);
    auto n_opt = nilpotency_index(R, P);
    if (!n_opt) {
        rep.fail("corollary.radical_nilpotent", "the prime radical is nilpotent", "no index");
        return rep;
    }
    unsigned n = *n_opt;
    if (n_expected > 0)
        rep.check("corollary.index", "nilpotency index matches the expected value",
                  n == n_expected, "observed n=" + std::to_string(n));
    auto maskP = detail::set_to_mask(R.order(), P.elements());
    bool stable = true;
    std::string witness;
    for (Letter x = 0; x < ctx->variables.size() && stable; ++x) {
        for (Elem a : P.elements()) {
            if (!maskP[ctx->sigma[x](a)]) {
                stable = false;
                witness = "sigma_" + ctx->variables[x] + "(" + std::to_string(a) + ")=" +
                          std::to_string(ctx->sigma[x](a));
                break;
            }
            if (!maskP[ctx->delta[x](a)]) {
                stable = false;
                witness = "delta_" + ctx->variables[x] + "(" + std::to_string(a) + ")=" +
                          std::to_string(ctx->delta[x](a));
                break;
            }
        }
    }
    rep.check("corollary.stability", "the prime radical is stable under every sigma_x, delta_x",
              stable, witness);
    // alternative hypothesis: delta_x(a) nilpotent on the radical
    bool alt = true;
    std::string alt_wit;
    for (Letter x = 0; x < ctx->variables.size() && alt; ++x)
        for (Elem a : P.elements()) {
            Elem v = ctx->delta[x](a), p = v;
            bool nil = false;
            for (unsigned i = 1; i <= R.order(); ++i) {
                if (p == R.zero()) { nil = true; break; }
                p = R.mul(p, v);
            }
            if (!nil) {
                alt = false;
                alt_wit = "delta_" + ctx->variables[x] + "(" + std::to_string(a) + ")";
                break;
            }
        }
    rep.check("corollary.delta_nilpotent_images",
              "delta_x maps radical elements to nilpotent elements", alt, alt_wit);
    if (!stable) return rep;  // the product check presumes stability

    // every product of n radical-coefficient polynomials of support degree <= 2
    auto words = words_up_to_degree(ctx->variables.size(), 2);
    const std::size_t W = words.size(), pn = P.size();
    double log_cases = double(n) * double(W) * std::log2(double(pn));
    bool exhaustive = log_cases <= std::log2(1e6);
    auto build = [&](const std::vector<std::size_t>& digits, std::size_t offset) {
        SkewPoly f(ctx);
        for (std::size_t i = 0; i < W; ++i)
            f.add_term(words[i], P.elements()[digits[offset + i]]);
        return f;
    };
    bool ok = true;
    std::string prod_wit;
    std::uint64_t cases = 0;
    if (exhaustive) {
        std::vector<std::size_t> digits(std::size_t(n) * W, 0);
        bool done = false;
        while (!done && ok) {
            SkewPoly prod = SkewPoly::one(ctx);
            for (unsigned i = 0; i < n; ++i) prod = prod * build(digits, std::size_t(i) * W);
            ++cases;
            if (!prod.is_zero()) {
                ok = false;
                prod_wit = to_string(prod);
            }
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == pn) digits[pos++] = 0;
            done = pos == digits.size();
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> dist(0, pn - 1);
        std::vector<std::size_t> digits(std::size_t(n) * W);
        for (std::size_t trial = 0; trial < sample && ok; ++trial) {
            for (auto& dg : digits) dg = dist(rng);
            SkewPoly prod = SkewPoly::one(ctx);
            for (unsigned i = 0; i < n; ++i) prod = prod * build(digits, std::size_t(i) * W);
            ++cases;
            if (!prod.is_zero()) {
                ok = false;
                prod_wit = to_string(prod);
            }
        }
    }
    rep.check("corollary.products_vanish",
              "every product of n radical-coefficient polynomials is zero (" +
                  std::string(exhaustive ? "exhaustive" : "sampled") + ", " +
                  std::to_string(cases) + " cases)",
              ok, prod_wit);
    return rep;
}

// ---------------------------------------------------------------------------
// q-skew product identity.

inline Report verify_q_skew_identity(const FiniteRing& R, const QSkewCertificate& cert,
                                     const Ideal& I, unsigned n, std::size_t sample,
                                     std::uint64_t seed = 1) {
    Report rep;
    if (!cert.verified) {
        rep.fail("qskew.certificate", "a verified q-skew certificate is supplied", "unverified");
        return rep;
    }
    const RingMap& sigma = cert.sigma;
    const RingMap& delta = cert.delta;
    bool sigma_stable = true;
    for (Elem a : I.elements())
        if (!I.contains(sigma(a))) { sigma_stable = false; break; }
    rep.check("qskew.sigma_stable", "sigma(I) contained in I", sigma_stable, "");
    if (!sigma_stable) return rep;

    Elem nfq = q_factorial(R, cert.q, n);
    auto apply_pow = [&](const RingMap& m, Elem v, unsigned times) {
        for (unsigned i = 0; i < times; ++i) v = m(v);
        return v;
    };
    auto check_tuple = [&](const std::vector<Elem>& a) {
        Elem prod = R.one();
        for (Elem ai : a) prod = R.mul(prod, ai);
        Elem lhs = apply_pow(delta, prod, n);
        Elem rhs = nfq;
        for (unsigned i = 0; i < n; ++i)
            rhs = R.mul(rhs, apply_pow(sigma, delta(a[i]), n - 1 - i));
        return I.contains(R.sub(lhs, rhs));
    };
    double log_cases = double(n) * std::log2(double(I.size()));
    bool exhaustive = log_cases <= std::log2(1e6);
    bool ok = true;
    std::string wit;
    std::uint64_t cases = 0;
    std::vector<Elem> tuple(n, R.zero());
    if (exhaustive) {
        std::vector<std::size_t> digits(n, 0);
        bool done = I.size() == 0;
        while (!done && ok) {
            for (unsigned i = 0; i < n; ++i) tuple[i] = I.elements()[digits[i]];
            ++cases;
            if (!check_tuple(tuple)) {
                ok = false;
                wit = detail::elem_set_to_string(tuple);
            }
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == I.size()) digits[pos++] = 0;
            done = pos == digits.size();
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> dist(0, I.size() - 1);
        for (std::size_t trial = 0; trial < sample && ok; ++trial) {
            for (unsigned i = 0; i < n; ++i) tuple[i] = I.elements()[dist(rng)];
            ++cases;
            if (!check_tuple(tuple)) {
                ok = false;
                wit = detail::elem_set_to_string(tuple);
            }
        }
    }
    rep.check("qskew.product_identity",
              "delta^n of an n-fold product matches the twisted product modulo I (" +
                  std::string(exhaustive ? "exhaustive" : "sampled") + ", " +
                  std::to_string(cases) + " tuples)",
              ok, wit);

    auto idx_np = nilpotency_index(R, I);
    if (idx_np && *idx_np <= n) {
        bool cons = true;
        std::string cwit;
        Elem scale = R.pow(nfq, n);
        for (Elem a : I.elements()) {
            Elem d = delta(a);
            Elem v = R.mul(scale, R.pow(d, std::uint64_t(n) * n));
            if (v != R.zero()) {
                cons = false;
                cwit = "a=" + std::to_string(a);
                break;
            }
        }
        rep.check("qskew.consequence",
                  "((n!)_q)^n (delta(a))^{n^2} = 0 for every a in the nilpotent ideal", cons,
                  cwit);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive bounded quasi-inverse search: enumerate every polynomial b with
// support in words of degree <= d and test a + b = ab = ba exactly.

struct QuasiInverseSearch {
    enum class Verdict { NoSolution, SolutionFound, Truncated };
    Verdict verdict = Verdict::NoSolution;
    std::uint64_t space = 0;      // number of coefficient assignments
    std::vector<SkewPoly> solutions;
};

inline QuasiInverseSearch search_quasi_inverse(const SkewContext& ctx, const SkewPoly& a,
                                               std::size_t d,
                                               std::uint64_t cap = search_cap_from_env(),
                                               std::size_t max_solutions = 4) {
    const FiniteRing& R = ctx->ring;
    auto words = words_up_to_degree(ctx->variables.size(), d);
    QuasiInverseSearch out;
    double log_space = double(words.size()) * std::log2(double(R.order()));
    if (log_space > 62 || [&] {
            std::uint64_t s = 1;
            for (std::size_t i = 0; i < words.size(); ++i) s *= R.order();
            out.space = s;
            return s > cap;
        }()) {
        out.verdict = QuasiInverseSearch::Verdict::Truncated;
        return out;
    }
    std::vector<Elem> digits(words.size(), 0);
    bool done = false;
    while (!done) {
        SkewPoly b(ctx);
        for (std::size_t i = 0; i < words.size(); ++i) b.add_term(words[i], digits[i]);
        SkewPoly sum = a + b, ab = a * b, ba = b * a;
        if (sum == ab && ab == ba) {
            out.verdict = QuasiInverseSearch::Verdict::SolutionFound;
            if (out.solutions.size() < max_solutions) out.solutions.push_back(b);
        }
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == R.order()) digits[pos++] = 0;
        done = pos == digits.size();
    }
    return out;
}

// ---------------------------------------------------------------------------
// The full semiprimitivity proof trace, replayed on one concrete instance.

struct TraceStep {
    std::string name;
    std::string anchor;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
};

struct TraceReport {
    enum class Verdict { NoSolution, SolutionFound, Truncated };
    std::vector<TraceStep> steps;
    Verdict verdict = Verdict::NoSolution;
    std::optional<SkewPoly> solution;
    bool completed = false;

    void step(std::string name, std::string anchor, bool ok, std::string witness = {}) {
        steps.push_back({std::move(name), std::move(anchor),
                         ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness)});
    }
    bool all_pass() const {
        for (const auto& s : steps)
            if (s.status == CheckStatus::Fail) return false;
        return true;
    }
};

inline TraceReport semiprimitivity_trace(const SkewContext& ctx,
                                         const std::vector<SkewPoly>& gens,
                                         std::size_t search_degree,
                                         std::size_t closure_degree = 3,
                                         std::size_t window = 2,
                                         std::uint64_t cap = search_cap_from_env()) {
    const FiniteRing& R = ctx->ring;
    if (!is_semiprime(R))
        throw ConfigError("semiprimitivity trace requires a semiprime base ring");
    if (!ctx->automorphic)
        throw ConfigError("semiprimitivity trace requires an automorphic context");
    bool any_nonzero = false;
    for (const auto& g : gens) any_nonzero = any_nonzero || !g.is_zero();
    if (!any_nonzero) throw ConfigError("semiprimitivity trace: the generated ideal is zero");

    TraceReport tr;
    tr.step("goldie", "finite rings carry no infinite direct sums and have ACC on annihilators",
            true, "finite ring of order " + std::to_string(R.order()));

    // (1) leading-coefficient ideal and its annihilator
    auto lc = leading_coeff_group(ctx, gens, closure_degree, window);
    for (const auto& rec : lc.checks.records)
        tr.steps.push_back({rec.check_id, rec.anchor, rec.status, rec.witness});
    if (!lc.checks.all_pass()) return tr;
    auto maskI = detail::set_to_mask(R.order(), lc.I);
    auto maskM = detail::set_to_mask(R.order(), lc.M);

    // (2) regular element of the essential sum I + M, split as c + d
    std::optional<Elem> c_found;
    for (Elem s = 0; s < R.order() && !c_found; ++s) {
        for (Elem i : lc.I) {
            Elem m = R.sub(s, i);
            if (!maskM[m]) continue;
            if (is_regular(R, s)) c_found = i;
            break;  // the decomposition of s is unique since I and M meet in zero
        }
    }
    tr.step("regular_element", "the essential sum I + M contains a regular element",
            c_found.has_value(), c_found ? "c=" + std::to_string(*c_found) : "none found");
    if (!c_found) return tr;
    Elem c = *c_found;
    Ideal I_ideal(R, lc.I);
    tr.step("c_regular_in_I", "the I-component of the regular element is regular in I",
            is_regular_in(R, c, I_ideal), "c=" + std::to_string(c));
    auto lemma1 = verify_lemma1(R, I_ideal, c);
    for (const auto& rec : lemma1.records)
        tr.steps.push_back({rec.check_id, rec.anchor, rec.status, rec.witness});
    if (!lemma1.all_pass()) return tr;

    // (3) write c as a sum of leading coefficients, disjointify the
    // top-degree supports, and assemble a(X)
    auto decomp = lc.span->decompose(c);
    tr.step("decompose_c", "c is a sum of leading coefficients of ideal elements",
            decomp.has_value(), "m=" + std::to_string(decomp ? decomp->size() : 0));
    if (!decomp) return tr;
    std::vector<std::vector<Word>> family;
    for (const auto& [ai, omega] : *decomp) {
        std::vector<Word> top;
        std::size_t degw = omega.degree();
        for (const auto& [w, r] : omega.terms())
            if (w.degree() == degw) top.push_back(w);
        family.push_back(std::move(top));
    }
    auto dj = disjointify(family, ctx->variables.size());
    SkewPoly a(ctx);
    for (std::size_t i = 0; i < decomp->size(); ++i) {
        SkewPoly nu = SkewPoly::monomial(ctx, R.one(), dj.nus[i]);
        a = a + (*decomp)[i].second * nu;
    }
    bool translates_ok = !a.is_zero() && a.degree() == dj.t;
    // the coefficient of each translated leading word must be exactly a_i
    for (std::size_t i = 0; i < decomp->size() && translates_ok; ++i) {
        Word delta_i = (*decomp)[i].second.leading().word.concat(dj.nus[i]);
        translates_ok = a.coeff(delta_i) == (*decomp)[i].first;
    }
    tr.step("disjoint_translates",
            "after translation the top-degree monomials are pairwise disjoint and carry the a_i",
            translates_ok, to_string(a));
    if (a.coeff(Word::empty()) != R.zero()) {
        a = a * SkewPoly::variable(ctx, 0);  // the ideal absorbs right multiplication
        tr.step("constant_term", "right multiplication clears the constant term",
                a.coeff(Word::empty()) == R.zero(), to_string(a));
    } else {
        tr.step("constant_term", "a(X) has zero constant term and degree at least one",
                !a.is_zero() && a.degree() >= 1, to_string(a));
    }

    // (4) exhaustive bounded search for a quasi-inverse of a(X)
    auto search = search_quasi_inverse(ctx, a, search_degree, cap);
    switch (search.verdict) {
        case QuasiInverseSearch::Verdict::Truncated:
            tr.steps.push_back({"quasi_inverse_search",
                                "every radical element is quasi-invertible",
                                CheckStatus::Truncated,
                                "search space " + std::to_string(search.space) +
                                    " exceeds the cap"});
            tr.verdict = TraceReport::Verdict::Truncated;
            return tr;
        case QuasiInverseSearch::Verdict::SolutionFound:
            tr.steps.push_back({"quasi_inverse_search",
                                "every radical element is quasi-invertible",
                                CheckStatus::Fail,
                                "quasi-inverse found: " + to_string(search.solutions.front())});
            tr.verdict = TraceReport::Verdict::SolutionFound;
            tr.solution = search.solutions.front();
            return tr;
        case QuasiInverseSearch::Verdict::NoSolution:
            tr.step("quasi_inverse_search",
                    "no quasi-inverse of a(X) exists at the degree bound (space " +
                        std::to_string(search.space) + ")",
                    true, to_string(a));
            break;
    }
    tr.verdict = TraceReport::Verdict::NoSolution;

    // (5) why no quasi-inverse can exist: the two contradiction branches
    // replayed over R/M.
    // Degree branch: a leading coefficient b' of a degree >= 1 candidate
    // would need every b' pi(a_i) in M, which forces b' into M.
    bool degree_branch = true;
    std::string dwit;
    auto top_words = words_up_to_degree(ctx->variables.size(), search_degree);
    for (const Word& w : top_words) {
        if (w.is_empty()) continue;
        RingMap pi = pi_of_word(ctx, w);
        for (Elem bp = 0; bp < R.order() && degree_branch; ++bp) {
            if (maskM[bp]) continue;
            bool all_in_M = true;
            for (const auto& [ai, omega] : *decomp)
                if (!maskM[R.mul(bp, pi(ai))]) { all_in_M = false; break; }
            if (all_in_M) {
                degree_branch = false;
                dwit = "b'=" + std::to_string(bp) + " word=" +
                       word_to_string(w, ctx->variables);
            }
        }
        if (!degree_branch) break;
    }
    tr.step("degree_growth",
            "a quasi-inverse of degree >= 1 would raise the degree of the product: for every "
            "b' outside M some b' pi(a_i) escapes M",
            degree_branch, dwit);
    // Constant branch: a degree-zero candidate b0 outside M has c b0 != 0,
    // while the constant terms of the quasi-inverse equation force c b0 = 0.
    bool const_branch = true;
    std::string cwit;
    for (Elem b0 = 0; b0 < R.order(); ++b0) {
        if (maskM[b0]) continue;
        if (R.mul(c, b0) == R.zero()) {
            const_branch = false;
            cwit = "b0=" + std::to_string(b0);
            break;
        }
    }
    tr.step("constant_contradiction",
            "a degree-zero quasi-inverse b0 outside M would need c b0 = 0, but c b0 != 0",
            const_branch, cwit);
    tr.completed = tr.all_pass();
    return tr;
}

}  // namespace skewring
