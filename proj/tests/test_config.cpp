#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "skewring/config.hpp"

using namespace skewring;

namespace {
std::string corpus(const std::string& name) {
    return std::string(SKEWRING_CORPUS_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("ring construction from JSON specs") {
    REQUIRE(construct_ring(json::parse(R"({"kind":"mod","n":6})")).order() == 6);
    REQUIRE(construct_ring(json::parse(R"({"kind":"trunc_poly","p":5,"k":3})")).order() == 125);
    REQUIRE(construct_ring(
                json::parse(R"({"kind":"matrix","k":2,"base":{"kind":"mod","n":2}})"))
                .order() == 16);
    FiniteRing P = construct_ring(json::parse(
        R"({"kind":"product","left":{"kind":"mod","n":2},"right":{"kind":"mod","n":3}})"));
    REQUIRE(P.order() == 6);
    REQUIRE(P.one() == 4);
    FiniteRing Q = construct_ring(json::parse(
        R"({"kind":"quotient","base":{"kind":"trunc_poly","p":3,"k":2},"ideal_gens":[3]})"));
    REQUIRE(Q.order() == 3);
    REQUIRE(is_semiprime(Q));
}

TEST_CASE("table ring from nested JSON arrays") {
    json spec = json::parse(R"({
        "kind": "table", "order": 2, "one": 1,
        "add": [[0,1],[1,0]],
        "mul": [[0,0],[0,1]]
    })");
    FiniteRing F2 = construct_ring(spec);
    REQUIRE(F2.order() == 2);
    REQUIRE(F2.add(1, 1) == 0);
    REQUIRE(F2.mul(1, 1) == 1);
}

TEST_CASE("malformed ring specs are rejected") {
    REQUIRE_THROWS_AS(construct_ring(json::parse(R"({"kind":"galaxy"})")), ConfigError);
    REQUIRE_THROWS_AS(construct_ring(json::parse(R"({"n":6})")), ConfigError);
    REQUIRE_THROWS_AS(construct_ring(json::parse(R"({"kind":"mod"})")), ConfigError);
    REQUIRE_THROWS_AS(construct_ring(json::parse("[1,2]")), ConfigError);
    REQUIRE_THROWS_AS(construct_ring(json::parse(R"({"kind":"mod","n":1})")), ConfigError);
}

TEST_CASE("map construction from JSON specs") {
    FiniteRing R = FiniteRing::trunc_poly(5, 3);
    REQUIRE(construct_map(R, json::parse(R"({"kind":"identity"})")).is_automorphism());
    RingMap s = construct_map(R, json::parse(R"({"kind":"scale_var","c":2})"));
    REQUIRE(s(5) == 10);
    RingMap d = construct_map(R, json::parse(R"({"kind":"var_derivation","f":25})"), &s);
    REQUIRE(d(5) == 25);
    REQUIRE(d.is_sigma_derivation());
    FiniteRing M = FiniteRing::matrix(2, FiniteRing::mod(2));
    REQUIRE(construct_map(M, json::parse(R"({"kind":"inner_auto","u":6})")).is_automorphism());
    RingMap b = construct_map(M, json::parse(R"({"kind":"inner_delta","b":2,
        "sigma":{"kind":"inner_auto","u":6}})"));
    REQUIRE(b.is_sigma_derivation());
    // an explicit table must cover the whole ring
    REQUIRE_THROWS_AS(construct_map(R, json::parse(R"({"kind":"table","values":[]})")),
                      ConfigError);
}

TEST_CASE("map spec errors") {
    FiniteRing R = FiniteRing::mod(4);
    REQUIRE_THROWS_AS(construct_map(R, json::parse(R"({"kind":"warp"})")), ConfigError);
    REQUIRE_THROWS_AS(construct_map(R, json::parse(R"({"kind":"inner_auto"})")), ConfigError);
    REQUIRE_THROWS_AS(construct_map(R, json::parse(R"({"kind":"inner_auto","u":2})")),
                      ConfigError);
    REQUIRE_THROWS_AS(construct_map(R, json::parse("42")), ConfigError);
}

TEST_CASE("lab config parsing") {
    json j = json::parse(R"({
        "ring": {"kind": "trunc_poly", "p": 2, "k": 2},
        "variables": ["x"],
        "sigma": [{"kind": "identity"}],
        "delta": [{"kind": "var_derivation", "f": 2}],
        "bounds": {"mul_cap": 6, "trace_degree": 2},
        "samples": {"pairs": 50},
        "seed": 9,
        "suites": {"corollary": {"n": 2}}
    })");
    LabConfig cfg = parse_lab_config(j);
    REQUIRE(cfg.ring.order() == 4);
    REQUIRE(cfg.ctx->variables == std::vector<std::string>{"x"});
    REQUIRE(cfg.ctx->automorphic);
    REQUIRE(cfg.ctx->degree_cap == 6);
    REQUIRE(cfg.bounds.trace_degree == 2);
    REQUIRE(cfg.bounds.closure_degree == 3);  // default survives partial bounds
    REQUIRE(cfg.samples.pairs == 50);
    REQUIRE(cfg.samples.hom_pairs == 500);
    REQUIRE(cfg.seed == 9);
    REQUIRE(cfg.suites.contains("corollary"));
}

TEST_CASE("lab config defaults and errors") {
    json base = json::parse(R"({
        "ring": {"kind": "mod", "n": 6},
        "sigma": [{"kind": "identity"}],
        "delta": [{"kind": "zero"}]
    })");
    LabConfig cfg = parse_lab_config(base);
    REQUIRE(cfg.ctx->variables == std::vector<std::string>{"x"});  // default variable
    REQUIRE(cfg.seed == 1);
    REQUIRE(cfg.suites.empty());

    json missing = base;
    missing.erase("sigma");
    REQUIRE_THROWS_AS(parse_lab_config(missing), ConfigError);
    json mismatch = base;
    mismatch["variables"] = {"x", "y"};
    REQUIRE_THROWS_AS(parse_lab_config(mismatch), ConfigError);
    REQUIRE_THROWS_AS(parse_lab_config(json::parse("[]")), ConfigError);
    REQUIRE_THROWS_AS(load_lab_config("/nonexistent/path.json"), ConfigError);
}

TEST_CASE("every corpus config loads and validates") {
    struct Expect {
        std::string file;
        std::size_t order;
        std::size_t vars;
        bool automorphic;
    };
    for (const auto& e : {Expect{"z4.json", 4, 1, true},
                          Expect{"f2t2_euler.json", 4, 1, true},
                          Expect{"f3t2_euler.json", 9, 2, true},
                          Expect{"f5t3_qskew.json", 125, 1, true},
                          Expect{"prod23.json", 6, 2, true},
                          Expect{"mat2f2_inner.json", 16, 2, true},
                          Expect{"f3_quotient.json", 3, 1, true}}) {
        INFO(e.file);
        LabConfig cfg = load_lab_config(corpus(e.file));
        REQUIRE(cfg.ring.order() == e.order);
        REQUIRE(cfg.ctx->variables.size() == e.vars);
        REQUIRE(cfg.ctx->automorphic == e.automorphic);
        REQUIRE_NOTHROW(validate_ring_axioms(cfg.ring));
    }
    REQUIRE(load_lab_config(corpus("prod23.json")).suites.contains("trace"));
    REQUIRE(load_lab_config(corpus("f5t3_qskew.json")).suites.contains("qskew"));
}
