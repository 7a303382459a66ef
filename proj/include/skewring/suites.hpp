#pragma once

// The named verification suites the CLI dispatches to. Every suite takes a
// parsed LabConfig and returns a Report; records appear in a canonical order
// so machine output is diff-stable.

#include <random>
#include <string>
#include <vector>

#include "skewring/config.hpp"
#include "skewring/radical_lab.hpp"
#include "skewring/report.hpp"

namespace skewring {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"axioms",   "order",  "skewpoly",
                                                "lemma1",   "prop2",  "corollary",
                                                "qskew",    "trace"};
    return names;
}

namespace detail {

inline SkewPoly random_poly(const SkewContext& ctx, const std::vector<Word>& words,
                            std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> dist(0, Elem(ctx->ring.order() - 1));
    SkewPoly f(ctx);
    for (const Word& w : words) f.add_term(w, dist(rng));
    return f;
}

inline std::vector<SkewPoly> parse_poly_list(const SkewContext& ctx, const json& arr) {
    std::vector<SkewPoly> out;
    for (const auto& item : arr) out.push_back(poly_from_string(ctx, item.get<std::string>()));
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Report suite_axioms(const LabConfig& cfg) {
    Report rep;
    const FiniteRing& R = cfg.ring;
    try {
        validate_ring_axioms(R);
        rep.pass("axioms.ring", "ring axioms hold on the configured base ring",
                 R.name() + ", order " + std::to_string(R.order()));
    } catch (const CounterexampleError& e) {
        rep.fail("axioms.ring", "ring axioms hold on the configured base ring", e.what());
        return rep;
    }
    Ideal J = jacobson_radical(R);
    Ideal P = prime_radical(R);
    rep.check("axioms.radicals_agree",
              "for a finite ring the quasi-regularity radical and the prime radical coincide",
              J.elements() == P.elements(), "");
    auto n = nilpotency_index(R, J);
    rep.check("axioms.radical_nilpotent", "the radical of a finite ring is nilpotent",
              n.has_value(), "");
    if (is_semiprime(R)) {
        // annihilator symmetry for a couple of canonical ideals
        Ideal full = ideal_closure(R, {R.one()});
        auto a1 = annihilators(R, full.elements());
        bool sym = a1.left == a1.right;
        for (Elem g = 0; g < R.order() && sym && g < 8; ++g) {
            Ideal I = ideal_closure(R, {g});
            auto ai = annihilators(R, I.elements());
            sym = ai.left == ai.right;
        }
        rep.check("axioms.ann_symmetric",
                  "left and right annihilators of ideals coincide in a semiprime ring", sym, "");
    }
    // closure idempotence on singleton generator sets
    bool idem = true;
    for (Elem g = 0; g < R.order() && g < 8; ++g) {
        Ideal I = ideal_closure(R, {g});
        Ideal II = ideal_closure(R, std::span<const Elem>(I.elements()));
        idem = idem && I.elements() == II.elements();
    }
    rep.check("axioms.closure_idempotent", "ideal closure is idempotent", idem, "");
    return rep;
}

// ---------------------------------------------------------------------------

inline Report suite_order(const LabConfig& cfg) {
    (void)cfg;
    Report rep;
    for (std::size_t d : {2, 3}) {
        auto words = words_up_to_degree(d, 4);
        bool total = true, antisym = true, trans = true, compat = true;
        for (const Word& u : words)
            for (const Word& v : words) {
                auto uv = compare_lex(u, v);
                auto vu = compare_lex(v, u);
                if (u == v) {
                    if (uv != std::strong_ordering::equal) antisym = false;
                } else {
                    if (uv == std::strong_ordering::equal) antisym = false;
                    if ((uv == std::strong_ordering::less) == (vu == std::strong_ordering::less))
                        total = false;
                }
            }
        for (const Word& u : words)
            for (const Word& v : words)
                for (const Word& w : words) {
                    if (compare_lex(u, v) == std::strong_ordering::less &&
                        compare_lex(v, w) == std::strong_ordering::less &&
                        compare_lex(u, w) != std::strong_ordering::less)
                        trans = false;
                }
        // order among equal-degree words survives one-sided multiplication
        for (const Word& u : words)
            for (const Word& v : words) {
                if (u.degree() != v.degree()) continue;
                if (compare_lex(u, v) != std::strong_ordering::less) continue;
                for (std::size_t x = 0; x < d; ++x) {
                    Word m = Word::single(Letter(x));
                    if (compare_lex(u.concat(m), v.concat(m)) != std::strong_ordering::less)
                        compat = false;
                    if (compare_lex(m.concat(u), m.concat(v)) != std::strong_ordering::less)
                        compat = false;
                }
            }
        std::string suffix = ".alphabet" + std::to_string(d);
        rep.check("order.total" + suffix, "the degree-lex order is a total order", total && antisym,
                  "");
        rep.check("order.transitive" + suffix, "the degree-lex order is transitive", trans, "");
        rep.check("order.monoid_compatible" + suffix,
                  "one-sided multiplication preserves strict order among equal degrees", compat,
                  "");
    }
    return rep;
}

// ---------------------------------------------------------------------------

inline Report suite_skewpoly(const LabConfig& cfg) {
    Report rep;
    const SkewContext& ctx = cfg.ctx;
    const FiniteRing& R = cfg.ring;
    std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ull + 1);
    auto words3 = words_up_to_degree(ctx->variables.size(), 3);
    auto words2 = words_up_to_degree(ctx->variables.size(), 2);

    // multiplication against the operator-representation oracle
    bool oracle_ok = true;
    std::string wit;
    for (std::size_t i = 0; i < cfg.samples.pairs && oracle_ok; ++i) {
        SkewPoly f = detail::random_poly(ctx, words3, rng);
        SkewPoly g = detail::random_poly(ctx, words3, rng);
        if (!((f * g) == operator_rep(ctx, f, g))) {
            oracle_ok = false;
            wit = to_string(f) + " | " + to_string(g);
        }
    }
    rep.check("skewpoly.mul_oracle",
              "normal-form multiplication agrees with the operator representation", oracle_ok,
              wit);
    // rep(f)(1) = f
    bool rep_one = true;
    for (std::size_t i = 0; i < 50 && rep_one; ++i) {
        SkewPoly f = detail::random_poly(ctx, words3, rng);
        rep_one = operator_rep(ctx, f, SkewPoly::one(ctx)) == f;
    }
    rep.check("skewpoly.rep_at_one", "the operator of f applied to 1 returns f", rep_one, "");

    // associativity and unit laws
    bool assoc = true;
    std::string awit;
    for (std::size_t i = 0; i < cfg.samples.triples && assoc; ++i) {
        SkewPoly f = detail::random_poly(ctx, words2, rng);
        SkewPoly g = detail::random_poly(ctx, words3, rng);
        SkewPoly h = detail::random_poly(ctx, words3, rng);
        if (!(((f * g) * h) == (f * (g * h)))) {
            assoc = false;
            awit = to_string(f) + " | " + to_string(g) + " | " + to_string(h);
        }
    }
    rep.check("skewpoly.associative", "polynomial multiplication is associative", assoc, awit);
    bool units = true, bilinear = true;
    for (std::size_t i = 0; i < 100 && (units || bilinear); ++i) {
        SkewPoly f = detail::random_poly(ctx, words3, rng);
        SkewPoly g = detail::random_poly(ctx, words3, rng);
        SkewPoly h = detail::random_poly(ctx, words3, rng);
        units = units && (SkewPoly::one(ctx) * f) == f && (f * SkewPoly::one(ctx)) == f;
        bilinear = bilinear && ((f + g) * h) == (f * h + g * h) &&
                   (h * (f + g)) == (h * f + h * g);
    }
    rep.check("skewpoly.units", "1 is a two-sided unit", units, "");
    rep.check("skewpoly.bilinear", "multiplication is bilinear", bilinear, "");

    // defining relation at the polynomial level, plus the Leibniz expansion
    bool rel_ok = true;
    for (Letter x = 0; x < ctx->variables.size() && rel_ok; ++x)
        for (Elem r = 0; r < R.order() && rel_ok; ++r) {
            SkewPoly lhs = SkewPoly::variable(ctx, x) * SkewPoly::constant(ctx, r);
            SkewPoly rhs = SkewPoly::monomial(ctx, ctx->sigma[x](r), Word::single(x)) +
                           SkewPoly::constant(ctx, ctx->delta[x](r));
            rel_ok = lhs == rhs;
        }
    rep.check("skewpoly.defining_relation", "x r = sigma_x(r) x + delta_x(r)", rel_ok, "");
    bool leibniz = true;
    for (Letter x = 0; x < ctx->variables.size() && leibniz; ++x)
        for (Elem r = 0; r < R.order() && leibniz; ++r)
            for (Elem s = 0; s < R.order() && leibniz; ++s)
                leibniz = ctx->delta[x](R.mul(r, s)) ==
                          R.add(R.mul(ctx->delta[x](r), s),
                                R.mul(ctx->sigma[x](r), ctx->delta[x](s)));
    rep.check("skewpoly.leibniz", "every delta_x satisfies the sigma-Leibniz rule", leibniz, "");

    // leading decomposition round trip
    bool lead_ok = true;
    for (std::size_t i = 0; i < 100 && lead_ok; ++i) {
        SkewPoly f = detail::random_poly(ctx, words3, rng);
        if (f.is_zero()) continue;
        auto l = f.leading();
        lead_ok = (SkewPoly::monomial(ctx, l.coeff, l.word) + l.tail) == f &&
                  (l.tail.is_zero() ||
                   compare_lex(l.tail.leading().word, l.word) == std::strong_ordering::less);
    }
    rep.check("skewpoly.leading", "the leading decomposition is exact and order-respecting",
              lead_ok, "");

    // pi-twist: w s has leading coefficient pi(s) on leading word w
    if (ctx->automorphic) {
        bool pi_ok = true;
        for (std::size_t i = 0; i < 50 && pi_ok; ++i) {
            std::uniform_int_distribution<std::size_t> wdist(0, words3.size() - 1);
            std::uniform_int_distribution<Elem> edist(0, Elem(R.order() - 1));
            Word w = words3[wdist(rng)];
            Elem s = edist(rng);
            RingMap pi = pi_of_word(ctx, w);
            SkewPoly prod = SkewPoly::monomial(ctx, R.one(), w) * SkewPoly::constant(ctx, s);
            Elem expect = pi(s);
            if (expect == R.zero()) {
                pi_ok = prod.is_zero() || compare_lex(prod.leading().word, w) ==
                                              std::strong_ordering::less;
            } else {
                pi_ok = !prod.is_zero() && prod.leading().word == w &&
                        prod.leading().coeff == expect;
            }
        }
        rep.check("skewpoly.pi_twist", "w s = pi(s) w + lower terms", pi_ok, "");
    }

    // universal property with the identity evaluation
    {
        std::vector<SkewPoly> images;
        for (Letter x = 0; x < ctx->variables.size(); ++x)
            images.push_back(SkewPoly::variable(ctx, x));
        auto hom = evaluate_hom(ctx, PolyRingTarget{ctx},
                                [&](Elem r) { return SkewPoly::constant(ctx, r); }, images);
        bool hom_ok = true;
        for (std::size_t i = 0; i < cfg.samples.hom_pairs && hom_ok; ++i) {
            SkewPoly f = detail::random_poly(ctx, words2, rng);
            SkewPoly g = detail::random_poly(ctx, words2, rng);
            hom_ok = hom(f) == f && hom(f * g) == hom(f) * hom(g) &&
                     hom(f + g) == hom(f) + hom(g);
        }
        rep.check("skewpoly.universal_identity",
                  "the identity-data evaluation is the identity homomorphism", hom_ok, "");
    }

    // universal property through the quotient by the radical, when it acts
    Ideal P = prime_radical(R);
    if (!P.is_zero()) {
        bool stable = true;
        for (Letter x = 0; x < ctx->variables.size() && stable; ++x)
            for (Elem a : P.elements())
                if (!P.contains(ctx->sigma[x](a)) || !P.contains(ctx->delta[x](a))) {
                    stable = false;
                    break;
                }
        if (stable) {
            FiniteRing Rq = make_quotient(R, P);
            std::vector<RingMap> qs, qd;
            for (Letter x = 0; x < ctx->variables.size(); ++x) {
                qs.push_back(induce_on_quotient(Rq, ctx->sigma[x]));
                qd.push_back(induce_on_quotient(Rq, ctx->delta[x]));
            }
            SkewContext qctx = make_context(Rq, ctx->variables, qs, qd, ctx->degree_cap);
            const auto& qi = *Rq.quotient_info();
            std::vector<SkewPoly> images;
            for (Letter x = 0; x < ctx->variables.size(); ++x)
                images.push_back(SkewPoly::variable(qctx, x));
            auto hom = evaluate_hom(ctx, PolyRingTarget{qctx},
                                    [&](Elem r) { return SkewPoly::constant(qctx, qi.eta[r]); },
                                    images);
            bool hom_ok = true;
            for (std::size_t i = 0; i < cfg.samples.hom_pairs && hom_ok; ++i) {
                SkewPoly f = detail::random_poly(ctx, words2, rng);
                SkewPoly g = detail::random_poly(ctx, words2, rng);
                // multiplicative, additive, and literally coefficientwise reduction
                SkewPoly fr(qctx);
                for (const auto& [w, r] : f.terms()) fr.add_term(w, qi.eta[r]);
                hom_ok = hom(f) == fr && hom(f * g) == hom(f) * hom(g) &&
                         hom(f + g) == hom(f) + hom(g);
            }
            rep.check("skewpoly.universal_quotient",
                      "reduction mod the radical is the evaluation homomorphism it induces",
                      hom_ok, "");
        }
    }

    // directness of the sum of left ideals S x y^i (two variables or more)
    if (ctx->variables.size() >= 2) {
        auto words1 = words_up_to_degree(ctx->variables.size(), 1);
        bool direct = true;
        std::string dwit;
        std::vector<SkewPoly> shifts;
        for (int i = 0; i <= 2; ++i) {
            Word xyi = Word::single(0);
            for (int j = 0; j < i; ++j) xyi = xyi.concat(Word::single(1));
            shifts.push_back(SkewPoly::monomial(ctx, R.one(), xyi));
        }
        for (std::size_t trial = 0; trial < 200 && direct; ++trial) {
            SkewPoly sum(ctx);
            bool all_nonzero = true;
            for (int i = 0; i <= 2; ++i) {
                SkewPoly f = detail::random_poly(ctx, words1, rng);
                if (f.is_zero()) { all_nonzero = false; break; }
                sum = sum + f * shifts[i];
            }
            if (!all_nonzero) continue;
            if (sum.is_zero()) { direct = false; dwit = "vanishing combination"; }
        }
        rep.check("skewpoly.directness",
                  "nonzero combinations over the shifted left ideals S x y^i never vanish",
                  direct, dwit);
    }

    // bounded quasi-inverses of nilpotent elements
    {
        bool qi_ok = true;
        SkewPoly zero = SkewPoly::zero(ctx);
        auto z = quasi_inverse_nilpotent(zero, 4);
        qi_ok = z && z->is_zero();
        auto one_result = quasi_inverse_nilpotent(SkewPoly::one(ctx), 6);
        qi_ok = qi_ok && !one_result.has_value();
        rep.check("skewpoly.quasi_inverse_edges",
                  "quasi-inverse of 0 is 0 and 1 is never nilpotent", qi_ok, "");
        Ideal P2 = prime_radical(R);
        if (!P2.is_zero()) {
            // radical-coefficient monomials are nilpotent when the maps keep
            // the radical stable; exercise whatever the bound certifies
            bool identities = true;
            for (Elem a : P2.elements()) {
                SkewPoly f = SkewPoly::monomial(ctx, a, Word::single(0));
                auto b = quasi_inverse_nilpotent(f, 8);
                if (b) {
                    SkewPoly s = f + *b;
                    identities = identities && s == (f * *b) && s == (*b * f);
                }
            }
            rep.check("skewpoly.quasi_inverse_identities",
                      "returned quasi-inverses satisfy a+b = ab = ba exactly", identities, "");
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

inline Report suite_lemma1(const LabConfig& cfg) {
    if (!cfg.suites.contains("lemma1"))
        throw ConfigError("suite 'lemma1' requested but not configured");
    const json& p = cfg.suites.at("lemma1");
    std::vector<Elem> gens = p.at("ideal_gens").get<std::vector<Elem>>();
    Ideal I = ideal_closure(cfg.ring, std::span<const Elem>(gens));
    Elem c = p.at("c").get<Elem>();
    return verify_lemma1(cfg.ring, I, c);
}

inline Report suite_prop2(const LabConfig& cfg) {
    if (!cfg.suites.contains("prop2"))
        throw ConfigError("suite 'prop2' requested but not configured");
    const json& p = cfg.suites.at("prop2");
    auto gens = detail::parse_poly_list(cfg.ctx, p.at("gens"));
    auto lc = leading_coeff_group(cfg.ctx, gens, cfg.bounds.closure_degree, cfg.bounds.window);
    Report rep = lc.checks;
    // the descending annihilator chain behind the sigma_x(M) = M claim
    for (Letter x = 0; x < cfg.ctx->variables.size(); ++x) {
        auto chain = annihilator_chain_stabilization(cfg.ring, lc.I, cfg.ctx->sigma[x]);
        rep.check("prop2.ann_chain." + cfg.ctx->variables[x],
                  "the chain ann(sigma^i(I)) stabilizes and fixes ann(I) (index " +
                      std::to_string(chain.index) + ")",
                  chain.sigma_fixes_ann == bool(lc.M_sigma_fixed[x]), "");
    }
    return rep;
}

inline Report suite_corollary(const LabConfig& cfg) {
    unsigned n_expected = 0;
    if (cfg.suites.contains("corollary"))
        n_expected = cfg.suites.at("corollary").value("n", 0u);
    return verify_radical_extension_nilpotent(cfg.ctx, n_expected, cfg.samples.corollary,
                                              cfg.seed);
}

inline Report suite_qskew(const LabConfig& cfg) {
    if (!cfg.suites.contains("qskew"))
        throw ConfigError("suite 'qskew' requested but not configured");
    const json& p = cfg.suites.at("qskew");
    Letter var = p.value("var", 0u);
    if (var >= cfg.ctx->variables.size()) throw ConfigError("qskew: variable index out of range");
    unsigned n = p.at("n").get<unsigned>();
    std::vector<Elem> gens = p.at("ideal_gens").get<std::vector<Elem>>();
    Ideal I = ideal_closure(cfg.ring, std::span<const Elem>(gens));
    Report rep;
    auto cert = q_skew_check(cfg.ctx->sigma[var], cfg.ctx->delta[var]);
    rep.check("qskew.exists", "a central invertible q with delta sigma = q sigma delta exists",
              cert.has_value(), "");
    if (!cert) return rep;
    rep.pass("qskew.q", "the first certified q in encoding order",
             "q=" + std::to_string(cert->q));
    rep.merge(verify_q_skew_identity(cfg.ring, *cert, I, n, cfg.samples.corollary, cfg.seed));
    // sanity of the q-factorial at q = 1
    bool fact_ok = true;
    for (unsigned m = 1; m <= 6 && fact_ok; ++m) {
        std::uint64_t f = 1;
        for (unsigned i = 2; i <= m; ++i) f *= i;
        fact_ok = q_factorial(cfg.ring, cfg.ring.one(), m) ==
                  cfg.ring.from_int(std::int64_t(f));
    }
    rep.check("qskew.factorial_at_one", "(n!)_1 equals n! for n <= 6", fact_ok, "");
    return rep;
}

inline Report trace_to_report(const TraceReport& tr) {
    Report rep;
    for (const auto& s : tr.steps)
        rep.records.push_back({"trace." + s.name, s.anchor, s.status, s.witness});
    return rep;
}

inline TraceReport run_trace(const LabConfig& cfg, std::vector<SkewPoly> gens,
                             std::size_t degree) {
    return semiprimitivity_trace(cfg.ctx, gens, degree, cfg.bounds.closure_degree,
                                 cfg.bounds.window);
}

inline Report suite_trace(const LabConfig& cfg) {
    if (!cfg.suites.contains("trace"))
        throw ConfigError("suite 'trace' requested but not configured");
    const json& p = cfg.suites.at("trace");
    auto gens = detail::parse_poly_list(cfg.ctx, p.at("gens"));
    std::size_t degree = p.value("degree", cfg.bounds.trace_degree);
    return trace_to_report(run_trace(cfg, gens, degree));
}

// ---------------------------------------------------------------------------

inline Report run_suite(const LabConfig& cfg, const std::string& name) {
    if (name == "axioms") return suite_axioms(cfg);
    if (name == "order") return suite_order(cfg);
    if (name == "skewpoly") return suite_skewpoly(cfg);
    if (name == "lemma1") return suite_lemma1(cfg);
    if (name == "prop2") return suite_prop2(cfg);
    if (name == "corollary") return suite_corollary(cfg);
    if (name == "qskew") return suite_qskew(cfg);
    if (name == "trace") return suite_trace(cfg);
    throw ConfigError("unknown suite '" + name + "'");
}

/// "all" runs every always-applicable suite plus each configured one.
inline std::vector<std::pair<std::string, Report>> run_suites(const LabConfig& cfg,
                                                              const std::string& selector) {
    std::vector<std::pair<std::string, Report>> out;
    if (selector != "all") {
        out.emplace_back(selector, run_suite(cfg, selector));
        return out;
    }
    for (const std::string& name : suite_names()) {
        bool configured = name == "axioms" || name == "order" || name == "skewpoly" ||
                          name == "corollary" || cfg.suites.contains(name);
        if (configured) out.emplace_back(name, run_suite(cfg, name));
    }
    return out;
}

}  // namespace skewring
