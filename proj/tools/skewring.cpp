// skewring: verification laboratory CLI for free skew extensions over
// finite rings.
//
//   skewring verify CONFIG --suite NAME [--format text|json] [--seed N] [--strict]
//   skewring compute CONFIG OP ARGS...   (mul | leading | disjointify | qfact | quasi_inverse)
//   skewring trace CONFIG [GENS...] [--degree D]
//
// Machine mode prints one JSON record per check: {check_id, anchor, status,
// witness}. Exit codes: verify 0 all pass / 1 failure / 2 config error;
// trace 0 no quasi-inverse / 1 solution found / 2 precondition / 3 truncated.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewring/config.hpp"
#include "skewring/suites.hpp"

namespace {

using namespace skewring;

void emit_record(const CheckRecord& rec, const std::string& format) {
    if (format == "json") {
        json line;
        line["check_id"] = rec.check_id;
        line["anchor"] = rec.anchor;
        line["status"] = to_cstring(rec.status);
        line["witness"] = rec.witness;
        std::cout << line.dump() << "\n";
    } else {
        std::printf("%-9s %-36s %s", to_cstring(rec.status), rec.check_id.c_str(),
                    rec.anchor.c_str());
        if (!rec.witness.empty()) std::printf("  [%s]", rec.witness.c_str());
        std::printf("\n");
    }
}

int cmd_verify(const std::string& config_path, const std::string& suite,
               const std::string& format, std::optional<std::uint64_t> seed, bool strict) {
    LabConfig cfg = load_lab_config(config_path);
    if (seed) cfg.seed = *seed;
    bool ok = true;
    for (const auto& [name, rep] : run_suites(cfg, suite)) {
        if (format == "text") std::printf("== suite %s ==\n", name.c_str());
        for (const auto& rec : rep.records) emit_record(rec, format);
        ok = ok && rep.all_pass(strict);
    }
    return ok ? 0 : 1;
}

std::vector<std::vector<Word>> parse_family(const std::string& text,
                                            const std::vector<std::string>& names) {
    std::vector<std::vector<Word>> family;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t open = text.find('[', pos);
        std::size_t close = text.find(']', open);
        if (open == std::string::npos || close == std::string::npos)
            throw ConfigError("family syntax: [w1,w2];[w3]");
        std::vector<Word> set;
        std::string inner = text.substr(open + 1, close - open - 1);
        std::size_t p = 0;
        while (p <= inner.size()) {
            std::size_t comma = inner.find(',', p);
            std::string tok = inner.substr(p, comma == std::string::npos ? std::string::npos
                                                                         : comma - p);
            while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
            while (!tok.empty() && tok.back() == ' ') tok.pop_back();
            if (!tok.empty()) set.push_back(word_from_string(tok, names));
            if (comma == std::string::npos) break;
            p = comma + 1;
        }
        family.push_back(std::move(set));
        pos = close + 1;
    }
    return family;
}

int cmd_compute(const std::string& config_path, const std::string& op,
                const std::vector<std::string>& args, const std::string& format, Elem q_arg,
                unsigned bound) {
    LabConfig cfg = load_lab_config(config_path);
    std::string result;
    if (op == "mul") {
        if (args.size() != 2) throw ConfigError("mul needs two polynomial arguments");
        SkewPoly f = poly_from_string(cfg.ctx, args[0]);
        SkewPoly g = poly_from_string(cfg.ctx, args[1]);
        result = to_string(f * g);
    } else if (op == "leading") {
        if (args.size() != 1) throw ConfigError("leading needs one polynomial argument");
        SkewPoly f = poly_from_string(cfg.ctx, args[0]);
        auto l = f.leading();
        result = "lc=" + std::to_string(l.coeff) + "; lw=" +
                 word_to_string(l.word, cfg.ctx->variables) + "; tail=" + to_string(l.tail);
    } else if (op == "disjointify") {
        if (args.size() != 1) throw ConfigError("disjointify needs one family argument");
        auto family = parse_family(args[0], cfg.ctx->variables);
        auto dj = disjointify(family, cfg.ctx->variables.size());
        result = "t=" + std::to_string(dj.t) + "; nu=[";
        for (std::size_t i = 0; i < dj.nus.size(); ++i) {
            if (i) result += ", ";
            result += word_to_string(dj.nus[i], cfg.ctx->variables);
        }
        result += "]";
    } else if (op == "qfact") {
        if (args.size() != 1) throw ConfigError("qfact needs the integer n");
        unsigned n = unsigned(std::stoul(args[0]));
        if (q_arg >= cfg.ring.order()) throw ConfigError("q encoding out of range");
        result = std::to_string(q_factorial(cfg.ring, q_arg, n));
    } else if (op == "quasi_inverse") {
        if (args.size() != 1) throw ConfigError("quasi_inverse needs one polynomial argument");
        SkewPoly a = poly_from_string(cfg.ctx, args[0]);
        auto b = quasi_inverse_nilpotent(a, bound);
        if (!b) throw DomainError("no nilpotency certified within the bound");
        result = to_string(*b);
    } else {
        throw ConfigError("unknown compute operation '" + op + "'");
    }
    if (format == "json") {
        json line;
        line["op"] = op;
        line["result"] = result;
        std::cout << line.dump() << "\n";
    } else {
        std::cout << result << "\n";
    }
    return 0;
}

int cmd_trace(const std::string& config_path, std::vector<std::string> gen_args,
              std::optional<std::size_t> degree, const std::string& format,
              std::optional<std::uint64_t> seed) {
    LabConfig cfg = load_lab_config(config_path);
    if (seed) cfg.seed = *seed;
    if (gen_args.empty()) {
        if (!cfg.suites.contains("trace") || !cfg.suites.at("trace").contains("gens"))
            throw ConfigError("trace: no generators given and none configured");
        for (const auto& g : cfg.suites.at("trace").at("gens"))
            gen_args.push_back(g.get<std::string>());
    }
    std::vector<SkewPoly> gens;
    for (const auto& g : gen_args) gens.push_back(poly_from_string(cfg.ctx, g));
    std::size_t d = degree.value_or(
        cfg.suites.contains("trace") ? cfg.suites.at("trace").value("degree",
                                                                    cfg.bounds.trace_degree)
                                     : cfg.bounds.trace_degree);
    TraceReport tr = run_trace(cfg, gens, d);
    for (const auto& rec : trace_to_report(tr).records) emit_record(rec, format);
    if (tr.verdict == TraceReport::Verdict::Truncated) return 3;
    if (tr.verdict == TraceReport::Verdict::SolutionFound) return 1;
    return tr.completed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification laboratory for free skew extensions over finite rings"};
    app.require_subcommand(1);

    std::string config_path, suite = "all", format = "text", op;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> degree;
    bool strict = false;
    std::vector<std::string> rest;
    Elem q_arg = 0;
    unsigned bound = 16;

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("config", config_path, "lab config JSON")->required();
    verify->add_option("--suite", suite, "suite selector or 'all'");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--seed", seed, "override the config seed");
    verify->add_flag("--strict", strict, "count truncated checks as failures");

    auto* compute = app.add_subcommand("compute", "one-off computations");
    compute->add_option("config", config_path, "lab config JSON")->required();
    compute->add_option("op", op, "mul | leading | disjointify | qfact | quasi_inverse")
        ->required();
    compute->allow_extras();  // operation arguments, taken verbatim
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--q", q_arg, "q encoding for qfact");
    compute->add_option("--bound", bound, "nilpotency bound for quasi_inverse");

    auto* trace = app.add_subcommand("trace", "replay the semiprimitivity proof trace");
    trace->add_option("config", config_path, "lab config JSON")->required();
    trace->allow_extras();  // ideal generators as polynomial strings
    trace->add_option("--degree", degree, "quasi-inverse search degree");
    trace->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    trace->add_option("--seed", seed, "override the config seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(config_path, suite, format, seed, strict);
        if (compute->parsed())
            return cmd_compute(config_path, op, compute->remaining(), format, q_arg, bound);
        if (trace->parsed()) return cmd_trace(config_path, trace->remaining(), degree, format, seed);
    } catch (const skewring::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const skewring::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const skewring::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
