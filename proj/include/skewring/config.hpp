#pragma once

// JSON configuration: ring specs, map specs and whole lab configs, as
// consumed by the CLI and the test corpus.

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewring/finite_ring.hpp"
#include "skewring/ideal.hpp"
#include "skewring/ring_map.hpp"
#include "skewring/skew_poly.hpp"

namespace skewring {

using json = nlohmann::ordered_json;

inline FiniteRing construct_ring(const json& spec, std::size_t order_cap = kDefaultOrderCap) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw ConfigError("ring spec must be an object with a 'kind'");
    const std::string kind = spec.at("kind").get<std::string>();
    try {
        if (kind == "mod") return FiniteRing::mod(spec.at("n").get<std::uint64_t>(), order_cap);
        if (kind == "matrix")
            return FiniteRing::matrix(spec.at("k").get<unsigned>(),
                                      construct_ring(spec.at("base"), order_cap), order_cap);
        if (kind == "product")
            return FiniteRing::product(construct_ring(spec.at("left"), order_cap),
                                       construct_ring(spec.at("right"), order_cap), order_cap);
        if (kind == "trunc_poly")
            return FiniteRing::trunc_poly(spec.at("p").get<std::uint64_t>(),
                                          spec.at("k").get<unsigned>(), order_cap);
        if (kind == "quotient") {
            FiniteRing base = construct_ring(spec.at("base"), order_cap);
            std::vector<Elem> gens = spec.at("ideal_gens").get<std::vector<Elem>>();
            Ideal M = ideal_closure(base, std::span<const Elem>(gens));
            return make_quotient(base, M, order_cap);
        }
        if (kind == "table") {
            std::size_t n = spec.at("order").get<std::size_t>();
            auto flatten = [&](const json& rows) {
                std::vector<Elem> flat;
                for (const auto& row : rows)
                    for (const auto& v : row) flat.push_back(v.get<Elem>());
                return flat;
            };
            return FiniteRing::from_tables(n, flatten(spec.at("add")), flatten(spec.at("mul")),
                                           spec.at("one").get<Elem>(), order_cap);
        }
    } catch (const json::exception& e) {
        throw ConfigError("malformed ring spec: " + std::string(e.what()));
    }
    throw ConfigError("unknown ring kind '" + kind + "'");
}

/// Builds a map from its spec. var_derivation and inner_delta need the sigma
/// they are a derivation against; pass it via `sigma`.
inline RingMap construct_map(const FiniteRing& R, const json& spec,
                             const RingMap* sigma = nullptr) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw ConfigError("map spec must be an object with a 'kind'");
    const std::string kind = spec.at("kind").get<std::string>();
    try {
        if (kind == "identity") return RingMap::identity(R);
        if (kind == "zero") return RingMap::zero_map(R);
        if (kind == "table")
            return RingMap(R, spec.at("values").get<std::vector<Elem>>());
        if (kind == "inner_auto") return inner_automorphism(R, spec.at("u").get<Elem>());
        if (kind == "inner_delta") {
            RingMap s = spec.contains("sigma") ? construct_map(R, spec.at("sigma"))
                        : sigma               ? *sigma
                                              : RingMap::identity(R);
            if (!s.is_endomorphism()) s = validate(s, MapClaim::Endomorphism);
            return inner_sigma_derivation(R, spec.at("b").get<Elem>(), s);
        }
        if (kind == "scale_var") return scale_var(R, spec.at("c").get<Elem>());
        if (kind == "var_derivation") {
            RingMap s = sigma ? *sigma : RingMap::identity(R);
            return var_derivation(R, spec.at("f").get<Elem>(), s);
        }
    } catch (const json::exception& e) {
        throw ConfigError("malformed map spec: " + std::string(e.what()));
    }
    throw ConfigError("unknown map kind '" + kind + "'");
}

struct LabBounds {
    std::size_t mul_cap = 8;
    std::size_t trace_degree = 1;
    std::size_t closure_degree = 3;
    std::size_t window = 2;
};

struct LabSamples {
    std::size_t pairs = 1000;
    std::size_t triples = 1000;
    std::size_t hom_pairs = 500;
    std::size_t corollary = 10000;
};

struct LabConfig {
    FiniteRing ring;
    SkewContext ctx;
    LabBounds bounds;
    LabSamples samples;
    std::uint64_t seed = 1;
    json suites;  // per-suite parameter blocks, possibly empty
};

inline LabConfig parse_lab_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    LabConfig cfg{construct_ring(j.at("ring")), nullptr};
    std::vector<std::string> vars;
    if (j.contains("variables")) vars = j.at("variables").get<std::vector<std::string>>();
    else vars = {"x"};
    if (!j.contains("sigma") || !j.contains("delta"))
        throw ConfigError("config needs per-variable 'sigma' and 'delta' lists");
    const json& sig = j.at("sigma");
    const json& del = j.at("delta");
    if (sig.size() != vars.size() || del.size() != vars.size())
        throw ConfigError("sigma/delta lists must have one entry per variable");
    if (j.contains("bounds")) {
        const json& b = j.at("bounds");
        cfg.bounds.mul_cap = b.value("mul_cap", cfg.bounds.mul_cap);
        cfg.bounds.trace_degree = b.value("trace_degree", cfg.bounds.trace_degree);
        cfg.bounds.closure_degree = b.value("closure_degree", cfg.bounds.closure_degree);
        cfg.bounds.window = b.value("window", cfg.bounds.window);
    }
    if (j.contains("samples")) {
        const json& s = j.at("samples");
        cfg.samples.pairs = s.value("pairs", cfg.samples.pairs);
        cfg.samples.triples = s.value("triples", cfg.samples.triples);
        cfg.samples.hom_pairs = s.value("hom_pairs", cfg.samples.hom_pairs);
        cfg.samples.corollary = s.value("corollary", cfg.samples.corollary);
    }
    cfg.seed = j.value("seed", std::uint64_t{1});
    std::vector<RingMap> sigmas, deltas;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        RingMap s = construct_map(cfg.ring, sig[i]);
        if (!s.is_endomorphism()) {
            // upgrade as far as the exhaustive checks allow
            s = validate(s, MapClaim::Endomorphism);
        }
        if (s.is_endomorphism() && !s.is_automorphism() && !check_bijective(s))
            s = RingMap(cfg.ring, s.table(), MapTag::Automorphism);
        RingMap d = construct_map(cfg.ring, del[i], &s);
        if (!d.is_sigma_derivation())
            d = validate(d, MapClaim::SigmaDerivation, std::make_shared<RingMap>(s));
        if (!d.sigma().same_table(s))
            d = validate(RingMap(cfg.ring, d.table()), MapClaim::SigmaDerivation,
                         std::make_shared<RingMap>(s));
        sigmas.push_back(std::move(s));
        deltas.push_back(std::move(d));
    }
    cfg.ctx = make_context(cfg.ring, vars, std::move(sigmas), std::move(deltas),
                           cfg.bounds.mul_cap);
    if (j.contains("suites")) cfg.suites = j.at("suites");
    else cfg.suites = json::object();
    return cfg;
}

inline LabConfig load_lab_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return parse_lab_config(j);
}

}  // namespace skewring
