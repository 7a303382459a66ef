#include <catch2/catch_amalgamated.hpp>

#include "skewring/finite_ring.hpp"
#include "skewring/ideal.hpp"

using namespace skewring;

TEST_CASE("mod-4 arithmetic") {
    FiniteRing R = FiniteRing::mod(4);
    REQUIRE(R.order() == 4);
    REQUIRE(R.add(2, 2) == 0);
    REQUIRE(R.mul(2, 2) == 0);
    REQUIRE(R.add(3, 2) == 1);
    REQUIRE(R.one() == 1);
    REQUIRE(R.neg(1) == 3);
    REQUIRE(R.sub(1, 3) == 2);
    REQUIRE(R.is_unit(3));
    REQUIRE(!R.is_unit(2));
    REQUIRE(R.inverse(3) == Elem{3});
    REQUIRE(R.pow(3, 2) == 1);
    REQUIRE(R.from_int(7) == 3);
    REQUIRE(R.from_int(-1) == 3);
}

TEST_CASE("matrix(2, mod-2) is a noncommutative ring of order 16") {
    FiniteRing R = FiniteRing::matrix(2, FiniteRing::mod(2));
    REQUIRE(R.order() == 16);
    // [[a,b],[c,d]] encodes as a + 2b + 4c + 8d
    REQUIRE(R.one() == 9);
    bool witness = false;
    for (Elem a = 0; a < R.order() && !witness; ++a)
        for (Elem b = 0; b < R.order() && !witness; ++b)
            witness = R.mul(a, b) != R.mul(b, a);
    REQUIRE(witness);
    // E01 * E10 = E00, E10 * E01 = E11
    REQUIRE(R.mul(2, 4) == 1);
    REQUIRE(R.mul(4, 2) == 8);
    REQUIRE(R.matrix_info() != nullptr);
    REQUIRE(R.matrix_info()->k == 2);
}

TEST_CASE("trunc_poly(5,3) has t^3 = 0, t^2 != 0") {
    FiniteRing R = FiniteRing::trunc_poly(5, 3);
    REQUIRE(R.order() == 125);
    Elem t = 5;
    REQUIRE(R.mul(t, t) == 25);
    REQUIRE(R.mul(R.mul(t, t), t) == R.zero());
    REQUIRE(R.pow(t, 2) != R.zero());
    auto info = R.trunc_poly_info();
    REQUIRE(info.has_value());
    REQUIRE(info->p == 5);
    REQUIRE(info->k == 3);
    REQUIRE(R.is_central(3));
    REQUIRE(R.is_unit(3));
}

TEST_CASE("product encoding is left-major") {
    FiniteRing R = FiniteRing::product(FiniteRing::mod(2), FiniteRing::mod(3));
    REQUIRE(R.order() == 6);
    // (1,0) = 3, (0,1) = 1
    REQUIRE(R.one() == 4);
    REQUIRE(R.mul(3, 3) == 3);
    REQUIRE(R.mul(3, 1) == 0);
    REQUIRE(R.add(3, 1) == 4);
    REQUIRE(R.product_info() != nullptr);
}

TEST_CASE("constructor guards") {
    REQUIRE_THROWS_AS(FiniteRing::mod(1), ConfigError);
    REQUIRE_THROWS_AS(FiniteRing::mod(100000), ConfigError);
    REQUIRE_THROWS_AS(FiniteRing::trunc_poly(4, 2), ConfigError);
    REQUIRE_THROWS_AS(FiniteRing::trunc_poly(5, 0), ConfigError);
    REQUIRE_THROWS_AS(FiniteRing::matrix(0, FiniteRing::mod(2)), ConfigError);
}

TEST_CASE("table ring round trip against mod-3") {
    FiniteRing M = FiniteRing::mod(3);
    std::vector<Elem> add, mul;
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b) {
            add.push_back(M.add(a, b));
            mul.push_back(M.mul(a, b));
        }
    FiniteRing T = FiniteRing::from_tables(3, add, mul, 1);
    REQUIRE(T.order() == 3);
    REQUIRE(T.zero() == 0);
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b) {
            REQUIRE(T.add(a, b) == M.add(a, b));
            REQUIRE(T.mul(a, b) == M.mul(a, b));
        }
    // a broken multiplication table fails the axiom validator
    std::vector<Elem> bad = mul;
    bad[1 * 3 + 2] = 0;
    REQUIRE_THROWS(FiniteRing::from_tables(3, add, bad, 1));
}

TEST_CASE("ideal closure") {
    FiniteRing Z6 = FiniteRing::mod(6);
    REQUIRE(ideal_closure(Z6, {2}).elements() == std::vector<Elem>{0, 2, 4});
    REQUIRE(ideal_closure(Z6, std::span<const Elem>{}).elements() == std::vector<Elem>{0});
    REQUIRE(ideal_closure(Z6, {1}).size() == 6);
    Ideal I = ideal_closure(Z6, {2});
    Ideal II = ideal_closure(Z6, std::span<const Elem>(I.elements()));
    REQUIRE(I.elements() == II.elements());
    REQUIRE_THROWS_AS(Ideal(Z6, std::vector<Elem>{0, 2}), DomainError);
}

TEST_CASE("annihilators") {
    FiniteRing Z6 = FiniteRing::mod(6);
    std::vector<Elem> A{2};
    auto ann = annihilators(Z6, A);
    REQUIRE(ann.left == std::vector<Elem>{0, 3});
    REQUIRE(ann.right == std::vector<Elem>{0, 3});
    REQUIRE(ann.both == std::vector<Elem>{0, 3});
    std::vector<Elem> zero{0};
    REQUIRE(annihilators(Z6, zero).both.size() == 6);
    std::vector<Elem> one{1};
    REQUIRE(annihilators(Z6, one).both == std::vector<Elem>{0});
}

TEST_CASE("radicals") {
    REQUIRE(jacobson_radical(FiniteRing::mod(4)).elements() == std::vector<Elem>{0, 2});
    REQUIRE(jacobson_radical(FiniteRing::matrix(2, FiniteRing::mod(2))).is_zero());
    FiniteRing F3t2 = FiniteRing::trunc_poly(3, 2);
    REQUIRE(jacobson_radical(F3t2).elements() == std::vector<Elem>{0, 3, 6});
    REQUIRE(prime_radical(F3t2).elements() == jacobson_radical(F3t2).elements());
    REQUIRE(prime_radical(FiniteRing::product(FiniteRing::mod(2), FiniteRing::mod(3))).is_zero());
    REQUIRE(prime_radical(FiniteRing::mod(5)).is_zero());
}

TEST_CASE("semiprimeness") {
    REQUIRE(is_semiprime(FiniteRing::matrix(2, FiniteRing::mod(2))));
    REQUIRE(!is_semiprime(FiniteRing::mod(4)));
    REQUIRE(is_semiprime(FiniteRing::product(FiniteRing::mod(2), FiniteRing::mod(3))));
}

TEST_CASE("regularity inside an ideal") {
    FiniteRing P = FiniteRing::product(FiniteRing::mod(2), FiniteRing::mod(3));
    Ideal I = ideal_closure(P, {3});
    REQUIRE(I.elements() == std::vector<Elem>{0, 3});
    REQUIRE(is_regular_in(P, 3, I));
    REQUIRE(!is_regular_in(P, 0, I));
    REQUIRE_THROWS_AS(is_regular_in(P, 1, I), DomainError);
    FiniteRing Z6 = FiniteRing::mod(6);
    Ideal J = ideal_closure(Z6, {2});
    REQUIRE(is_regular_in(Z6, 2, J));
}

TEST_CASE("regular element search") {
    FiniteRing P = FiniteRing::product(FiniteRing::mod(2), FiniteRing::mod(3));
    std::vector<Elem> all;
    for (Elem a = 0; a < P.order(); ++a) all.push_back(a);
    auto c = find_regular_element(P, all);
    REQUIRE(c.has_value());
    REQUIRE(is_regular(P, *c));
    REQUIRE(*c / 3 != 0);
    REQUIRE(*c % 3 != 0);
    std::vector<Elem> zero{0};
    REQUIRE(!find_regular_element(P, zero).has_value());
    // I + M with I = (1,0)R and M = (0,1)R covers elements with both parts set
    Ideal I = ideal_closure(P, {3}), M = ideal_closure(P, {1});
    std::vector<Elem> sum;
    for (Elem i : I.elements())
        for (Elem m : M.elements()) sum.push_back(P.add(i, m));
    auto c2 = find_regular_element(P, sum);
    REQUIRE(c2.has_value());
    REQUIRE(*c2 / 3 != 0);
    REQUIRE(*c2 % 3 != 0);
}

TEST_CASE("nilpotency index") {
    FiniteRing F3t2 = FiniteRing::trunc_poly(3, 2);
    REQUIRE(nilpotency_index(F3t2, ideal_closure(F3t2, {3})) == 2u);
    FiniteRing F5t3 = FiniteRing::trunc_poly(5, 3);
    REQUIRE(nilpotency_index(F5t3, ideal_closure(F5t3, {5})) == 3u);
    REQUIRE(nilpotency_index(F5t3, Ideal(F5t3, {0})) == 1u);
    // a non-nilpotent ideal yields no index
    FiniteRing Z6 = FiniteRing::mod(6);
    REQUIRE(!nilpotency_index(Z6, ideal_closure(Z6, {2})).has_value());
}

TEST_CASE("quotient ring and canonical epimorphism") {
    FiniteRing F3t2 = FiniteRing::trunc_poly(3, 2);
    Ideal M = ideal_closure(F3t2, {3});
    FiniteRing Q = make_quotient(F3t2, M);
    REQUIRE(Q.order() == 3);
    const auto* qi = Q.quotient_info();
    REQUIRE(qi != nullptr);
    // eta is a surjective homomorphism with kernel M
    for (Elem a = 0; a < F3t2.order(); ++a) {
        REQUIRE(qi->eta[qi->rep[qi->eta[a]]] == qi->eta[a]);
        for (Elem b = 0; b < F3t2.order(); ++b) {
            REQUIRE(qi->eta[F3t2.add(a, b)] == Q.add(qi->eta[a], qi->eta[b]));
            REQUIRE(qi->eta[F3t2.mul(a, b)] == Q.mul(qi->eta[a], qi->eta[b]));
        }
        REQUIRE((qi->eta[a] == Q.zero()) == M.contains(a));
    }
    REQUIRE(is_semiprime(Q));
}

TEST_CASE("axiom validator accepts every constructed ring") {
    for (auto R : {FiniteRing::mod(6), FiniteRing::trunc_poly(2, 2),
                   FiniteRing::matrix(2, FiniteRing::mod(3)),
                   FiniteRing::product(FiniteRing::mod(4), FiniteRing::mod(5))})
        REQUIRE_NOTHROW(validate_ring_axioms(R));
}
