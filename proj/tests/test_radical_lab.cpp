#include <catch2/catch_amalgamated.hpp>

#include "skewring/radical_lab.hpp"

using namespace skewring;

namespace {

RingMap zero_delta(const FiniteRing& R, const RingMap& sigma) {
    return validate(RingMap::zero_map(R), MapClaim::SigmaDerivation,
                    std::make_shared<RingMap>(sigma));
}

SkewContext prod23_ctx() {
    FiniteRing R = FiniteRing::product(FiniteRing::mod(2), FiniteRing::mod(3));
    RingMap id = RingMap::identity(R);
    return make_context(R, {"x", "y"}, {id, id}, {zero_delta(R, id), zero_delta(R, id)});
}

SkewContext mat2_ctx() {
    FiniteRing R = FiniteRing::matrix(2, FiniteRing::mod(2));
    RingMap s = inner_automorphism(R, 6);
    RingMap id = RingMap::identity(R);
    return make_context(R, {"x", "y"}, {s, id},
                        {inner_sigma_derivation(R, 2, s), zero_delta(R, id)});
}

SkewContext f3t2_euler_ctx() {
    FiniteRing R = FiniteRing::trunc_poly(3, 2);
    RingMap id = RingMap::identity(R);
    return make_context(R, {"x"}, {id}, {var_derivation(R, 3, id)});
}

SkewContext f2t2_unstable_ctx() {
    // delta(t) = 1 is a valid derivation in characteristic 2 but moves the
    // radical outside itself
    FiniteRing R = FiniteRing::trunc_poly(2, 2);
    RingMap id = RingMap::identity(R);
    return make_context(R, {"x"}, {id}, {var_derivation(R, 1, id)});
}

SkewContext diagonal_endo_ctx() {
    // (a, b) -> (a, a) on Z/2 x Z/2 is an endomorphism but not injective
    FiniteRing R = FiniteRing::product(FiniteRing::mod(2), FiniteRing::mod(2));
    RingMap s = validate(RingMap(R, std::vector<Elem>{0, 0, 3, 3}), MapClaim::Endomorphism);
    return make_context(R, {"x"}, {s}, {zero_delta(R, s)});
}

const CheckRecord* find_record(const Report& rep, const std::string& id) {
    for (const auto& r : rep.records)
        if (r.check_id == id) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("annihilator transfer lemma on concrete semiprime rings") {
    FiniteRing P = FiniteRing::product(FiniteRing::mod(2), FiniteRing::mod(3));
    Report rep = verify_lemma1(P, ideal_closure(P, {3}), 3);
    REQUIRE(rep.all_pass());
    REQUIRE(rep.records.size() == 5);
    auto* lann = find_record(rep, "lemma1.lann_c");
    REQUIRE(lann != nullptr);
    REQUIRE(lann->status == CheckStatus::Pass);

    FiniteRing M = FiniteRing::matrix(2, FiniteRing::mod(2));
    REQUIRE(verify_lemma1(M, ideal_closure(M, {9}), 9).all_pass());
}

TEST_CASE("lemma preconditions fail loudly") {
    FiniteRing P = FiniteRing::product(FiniteRing::mod(2), FiniteRing::mod(3));
    Ideal I = ideal_closure(P, {3});
    Report r1 = verify_lemma1(P, I, 0);  // 0 is never regular in I
    REQUIRE(!r1.all_pass());
    REQUIRE(find_record(r1, "lemma1.precondition.regular_in_I") != nullptr);
    Report r2 = verify_lemma1(P, I, 1);  // 1 = (0,1) lies outside I
    REQUIRE(find_record(r2, "lemma1.precondition.membership") != nullptr);
    FiniteRing Z4 = FiniteRing::mod(4);
    Report r3 = verify_lemma1(Z4, ideal_closure(Z4, {2}), 2);
    REQUIRE(find_record(r3, "lemma1.precondition.semiprime") != nullptr);
}

TEST_CASE("echelonized span membership and decomposition") {
    SkewContext ctx = prod23_ctx();
    LeadingSpan span(ctx);
    SkewPoly f = poly_from_string(ctx, "3*x + 1*1");
    SkewPoly g = poly_from_string(ctx, "3*x + 3*1");
    span.insert(f);
    span.insert(g);
    REQUIRE(span.contains(f));
    REQUIRE(span.contains(g));
    REQUIRE(span.contains(f + g));
    REQUIRE(span.contains(SkewPoly::zero(ctx)));
    // f - g = (1,1) - (1,0) = (0,1) enters via cancellation feedback
    REQUIRE(span.contains(poly_from_string(ctx, "4*1")));
    REQUIRE(!span.contains(poly_from_string(ctx, "1*xx")));
    auto dec = span.decompose(3);
    REQUIRE(dec.has_value());
    Elem sum = ctx->ring.zero();
    for (const auto& [c, p] : *dec) {
        sum = ctx->ring.add(sum, c);
        REQUIRE(span.contains(p));
        REQUIRE(p.leading().coeff == c);
    }
    REQUIRE(sum == 3);
    REQUIRE(span.decompose(ctx->ring.zero())->empty());
}

TEST_CASE("leading-coefficient ideal of ((1,0) x) in the product ring") {
    SkewContext ctx = prod23_ctx();
    auto rep = leading_coeff_group(ctx, {poly_from_string(ctx, "3*x")}, 3, 2);
    REQUIRE(rep.I == std::vector<Elem>{0, 3});
    REQUIRE(rep.M == std::vector<Elem>{0, 1, 2});
    REQUIRE(rep.is_ideal);
    REQUIRE(rep.stabilized);
    REQUIRE(rep.checks.all_pass());
    for (char b : rep.sigma_stable) REQUIRE(b == 1);
    for (char b : rep.M_sigma_fixed) REQUIRE(b == 1);
    for (char b : rep.M_delta_stable) REQUIRE(b == 1);
}

TEST_CASE("leading-coefficient ideal of the unit ideal is the whole ring") {
    SkewContext ctx = mat2_ctx();
    auto rep = leading_coeff_group(ctx, {SkewPoly::one(ctx)}, 2, 1);
    REQUIRE(rep.I.size() == ctx->ring.order());
    REQUIRE(rep.M == std::vector<Elem>{0});
    REQUIRE(rep.checks.all_pass());
}

TEST_CASE("leading-coefficient ideal of (t x) over F3[t]/(t^2)") {
    SkewContext ctx = f3t2_euler_ctx();
    auto rep = leading_coeff_group(ctx, {poly_from_string(ctx, "3*x")}, 3, 2);
    // x (t x) - (t x) x = t x, and t annihilates exactly (t)
    REQUIRE(rep.I == std::vector<Elem>{0, 3, 6});
    REQUIRE(rep.M == std::vector<Elem>{0, 3, 6});
    REQUIRE(rep.is_ideal);
    REQUIRE(rep.stabilized);
}

TEST_CASE("leading-coefficient computation guards") {
    SkewContext ctx = prod23_ctx();
    REQUIRE_THROWS_AS(leading_coeff_group(ctx, {SkewPoly::zero(ctx)}, 3, 2), DomainError);
    REQUIRE_THROWS_AS(leading_coeff_group(ctx, {}, 3, 2), DomainError);
    REQUIRE_THROWS_AS(leading_coeff_group(ctx, {SkewPoly::one(ctx)}, 7, 2), DegreeCapError);
    REQUIRE_THROWS_AS(
        leading_coeff_group(diagonal_endo_ctx(),
                            {SkewPoly::one(diagonal_endo_ctx())}, 2, 1),
        DomainError);
}

TEST_CASE("annihilator chain stabilization") {
    FiniteRing P = FiniteRing::product(FiniteRing::mod(2), FiniteRing::mod(3));
    std::vector<Elem> I{0, 3};
    auto res = annihilator_chain_stabilization(P, I, RingMap::identity(P));
    REQUIRE(res.index == 0);
    REQUIRE(res.sigma_fixes_ann);
    FiniteRing F = FiniteRing::trunc_poly(5, 3);
    std::vector<Elem> J;
    for (Elem a = 0; a < F.order(); a += 5) J.push_back(a);  // the ideal (t)
    auto res2 = annihilator_chain_stabilization(F, J, scale_var(F, 2));
    REQUIRE(res2.index == 0);
    REQUIRE(res2.sigma_fixes_ann);
    REQUIRE_THROWS_AS(annihilator_chain_stabilization(P, I, RingMap::zero_map(P)), DomainError);
}

TEST_CASE("radical-coefficient products vanish at the nilpotency index") {
    Report rep = verify_radical_extension_nilpotent(f3t2_euler_ctx(), 2, 100, 1);
    REQUIRE(rep.all_pass());
    auto* prod = find_record(rep, "corollary.products_vanish");
    REQUIRE(prod != nullptr);
    REQUIRE(prod->status == CheckStatus::Pass);
    REQUIRE(prod->anchor.find("exhaustive") != std::string::npos);
    // a semiprime base makes the statement vacuous at n = 1
    REQUIRE(verify_radical_extension_nilpotent(prod23_ctx(), 1, 10, 1).all_pass());
}

TEST_CASE("radical stability failure is caught with a witness") {
    Report rep = verify_radical_extension_nilpotent(f2t2_unstable_ctx(), 2, 100, 1);
    REQUIRE(!rep.all_pass());
    auto* st = find_record(rep, "corollary.stability");
    REQUIRE(st != nullptr);
    REQUIRE(st->status == CheckStatus::Fail);
    REQUIRE(!st->witness.empty());
    // the product check is skipped once stability fails
    REQUIRE(find_record(rep, "corollary.products_vanish") == nullptr);
}

TEST_CASE("q-skew product identity, exhaustive over (t) in F5[t]/(t^3)") {
    FiniteRing R = FiniteRing::trunc_poly(5, 3);
    RingMap s = scale_var(R, 2);
    RingMap d = var_derivation(R, 25, s);
    auto cert = q_skew_check(s, d);
    REQUIRE(cert.has_value());
    Ideal I = ideal_closure(R, {5});
    REQUIRE(I.size() == 25);
    Report rep = verify_q_skew_identity(R, *cert, I, 3, 100, 1);
    REQUIRE(rep.all_pass());
    auto* pi = find_record(rep, "qskew.product_identity");
    REQUIRE(pi != nullptr);
    REQUIRE(pi->anchor.find("exhaustive") != std::string::npos);
    REQUIRE(find_record(rep, "qskew.consequence") != nullptr);
    // n = 1 reduces to delta(a) = (1!)_q delta(a)
    REQUIRE(verify_q_skew_identity(R, *cert, I, 1, 10, 1).all_pass());
}

TEST_CASE("q-skew identity with a zero derivation is trivial") {
    FiniteRing R = FiniteRing::trunc_poly(3, 2);
    RingMap id = RingMap::identity(R);
    RingMap z = zero_delta(R, id);
    auto cert = q_skew_check(id, z);
    REQUIRE(cert.has_value());
    REQUIRE(verify_q_skew_identity(R, *cert, ideal_closure(R, {3}), 2, 10, 1).all_pass());
}

TEST_CASE("bounded quasi-inverse search") {
    FiniteRing R = FiniteRing::trunc_poly(2, 2);
    RingMap id = RingMap::identity(R);
    SkewContext ctx = make_context(R, {"x"}, {id}, {var_derivation(R, 2, id)});
    SkewPoly a = poly_from_string(ctx, "2*x");  // squares to zero
    auto res = search_quasi_inverse(ctx, a, 1);
    REQUIRE(res.verdict == QuasiInverseSearch::Verdict::SolutionFound);
    REQUIRE(res.space == 16);
    bool found = false;
    for (const auto& b : res.solutions) {
        REQUIRE(a + b == a * b);
        REQUIRE(a * b == b * a);
        found = found || b == a;
    }
    REQUIRE(found);
    // 1 has no quasi-inverse: 1 + b = b would force 1 = 0
    auto none = search_quasi_inverse(ctx, SkewPoly::one(ctx), 1);
    REQUIRE(none.verdict == QuasiInverseSearch::Verdict::NoSolution);
    auto trunc = search_quasi_inverse(ctx, a, 1, 4);
    REQUIRE(trunc.verdict == QuasiInverseSearch::Verdict::Truncated);
}

TEST_CASE("the full trace completes with no quasi-inverse on the product ring") {
    SkewContext ctx = prod23_ctx();
    auto tr = semiprimitivity_trace(ctx, {poly_from_string(ctx, "3*x")}, 1);
    REQUIRE(tr.completed);
    REQUIRE(tr.verdict == TraceReport::Verdict::NoSolution);
    REQUIRE(tr.all_pass());
    REQUIRE(!tr.solution.has_value());
    REQUIRE(tr.steps.front().name == "goldie");
    bool saw_search = false;
    for (const auto& s : tr.steps) saw_search = saw_search || s.name == "quasi_inverse_search";
    REQUIRE(saw_search);
}

TEST_CASE("the trace also closes over the matrix ring with inner twists") {
    SkewContext ctx = mat2_ctx();
    auto tr = semiprimitivity_trace(ctx, {poly_from_string(ctx, "9*x")}, 1);
    REQUIRE(tr.completed);
    REQUIRE(tr.verdict == TraceReport::Verdict::NoSolution);
    REQUIRE(tr.all_pass());
}

TEST_CASE("trace preconditions") {
    SkewContext bad = f3t2_euler_ctx();  // not semiprime
    REQUIRE_THROWS_AS(semiprimitivity_trace(bad, {SkewPoly::one(bad)}, 1), ConfigError);
    SkewContext ctx = prod23_ctx();
    REQUIRE_THROWS_AS(semiprimitivity_trace(ctx, {SkewPoly::zero(ctx)}, 1), ConfigError);
    SkewContext endo = diagonal_endo_ctx();
    REQUIRE_THROWS_AS(semiprimitivity_trace(endo, {SkewPoly::one(endo)}, 1), ConfigError);
}

TEST_CASE("search cap environment override") {
    REQUIRE(kDefaultSearchCap == 10'000'000);
    REQUIRE(search_cap_from_env() >= 1);
}
