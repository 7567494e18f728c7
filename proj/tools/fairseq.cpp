// Command-line front end: verify / generate / search / bounds / certificate.
// Exit codes: 0 valid|sat, 1 invalid|unsat, 2 timeout|unknown, 3 usage.

#include "fairseq/bounds.hpp"
#include "fairseq/conditions.hpp"
#include "fairseq/construct.hpp"
#include "fairseq/io.hpp"
#include "fairseq/proportionality.hpp"
#include "fairseq/search.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

using nlohmann::json;
using namespace fairseq;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitUsage = 3;

ConditionKind parse_kind_or_throw(const std::string &name) {
    auto kind = parse_condition_kind(name);
    if (!kind)
        throw CLI::ValidationError("--kind", "unknown condition kind: " + name);
    return *kind;
}

json violation_to_json(const Violation &v) {
    json j{{"agent", v.agent}, {"day", v.day},       {"j", v.index},
           {"bound", v.bound}, {"actual", v.actual}};
    if (v.window_start != 1)
        j["window_start"] = v.window_start;
    return j;
}

int cmd_verify(const std::string &file, const std::string &kind_name,
               int prop_c) {
    RepeatedAssignment seq = load_sequence(file);
    json report{{"file", file}, {"n", seq.n()}, {"days", seq.num_days()}};
    bool ok = true;
    if (!kind_name.empty()) {
        ConditionKind kind = parse_kind_or_throw(kind_name);
        CheckResult result = check(seq, kind);
        report["kind"] = to_string(kind);
        report["valid"] = result.valid();
        report["violations"] = json::array();
        for (const auto &v : result.violations)
            report["violations"].push_back(violation_to_json(v));
        ok = ok && result.valid();
    }
    if (prop_c >= 0) {
        PerpetualVerdict pv = is_perpetually_prop_c(seq, prop_c);
        json p{{"c", prop_c}, {"ok", pv.ok}};
        if (!pv.ok) {
            p["agent"] = pv.agent;
            p["day"] = pv.day;
            p["witness_k"] = pv.witness_k;
        }
        report["prop_c"] = p;
        ok = ok && pv.ok;
    }
    std::cout << report.dump(2) << "\n";
    return ok ? kExitValid : kExitInvalid;
}

Valuation load_valuation(const std::string &file) {
    std::ifstream in(file);
    if (!in)
        throw std::runtime_error("cannot open " + file);
    json doc = json::parse(in);
    std::vector<Rat> values;
    for (const auto &x : doc) {
        if (x.is_number_integer()) {
            values.emplace_back(x.get<long long>());
        } else if (x.is_string()) {
            std::string s = x.get<std::string>();
            auto slash = s.find('/');
            if (slash == std::string::npos)
                values.emplace_back(std::stoll(s));
            else
                values.emplace_back(std::stoll(s.substr(0, slash)),
                                    std::stoll(s.substr(slash + 1)));
        } else {
            throw std::runtime_error(
                "valuation entries must be integers or \"p/q\" strings");
        }
    }
    return Valuation(std::move(values));
}

int cmd_generate(int n, const std::string &algo, std::optional<uint64_t> seed,
                 const std::string &valuation_file, int days,
                 const std::string &out) {
    RepeatedAssignment seq = [&] {
        if (algo == "top-balanced")
            return build_top_balanced(n, seed);
        if (valuation_file.empty())
            throw CLI::ValidationError("--valuation",
                                       "value-greedy needs a valuation file");
        return build_value_greedy(n, days > 0 ? days : n,
                                  load_valuation(valuation_file));
    }();
    if (algo == "top-balanced" &&
        !check(seq, ConditionKind::TopBalanced).valid())
        throw std::logic_error("generated sequence failed self-verification");
    save_sequence(out, seq);
    std::cerr << "wrote " << out << " (" << seq.num_days() << " days)\n";
    return kExitValid;
}

int cmd_search(SearchConfig cfg, const std::string &out,
               const std::string &store_dir, bool quiet) {
    std::mutex io_mtx;
    std::atomic<long> last_report{-1};
    if (!quiet) {
        cfg.progress = [&](const ProgressRecord &p) {
            long sec = static_cast<long>(p.elapsed_seconds);
            long expected = last_report.load();
            if (sec > expected && last_report.compare_exchange_strong(expected, sec)) {
                std::lock_guard<std::mutex> lock(io_mtx);
                std::cerr << json{{"nodes", p.nodes},
                                  {"depth", p.depth},
                                  {"elapsed", p.elapsed_seconds}}
                                 .dump()
                          << "\n";
            }
        };
    }
    SearchOutcome outcome = search(cfg);
    if (outcome.status == SearchStatus::Sat &&
        !verify_witness(outcome, cfg.kind))
        throw std::logic_error("witness failed independent re-verification");

    ResultStore store(store_dir);
    auto record_path = store.save(cfg, outcome);

    json report{{"n", cfg.n},
                {"kind", to_string(cfg.kind)},
                {"max_days", cfg.effective_max_days()},
                {"status", to_string(outcome.status)},
                {"nodes", outcome.nodes_expanded},
                {"elapsed_seconds", outcome.elapsed_seconds},
                {"record", record_path.string()}};
    std::cout << report.dump(2) << "\n";
    if (outcome.witness && !out.empty()) {
        save_sequence(out, *outcome.witness);
        std::cerr << "wrote witness to " << out << "\n";
    }
    switch (outcome.status) {
    case SearchStatus::Sat: return kExitValid;
    case SearchStatus::Unsat: return kExitInvalid;
    case SearchStatus::Timeout: return kExitTimeout;
    }
    return kExitUsage;
}

json bound_report(int n) {
    BoundVerdict b = balanced_impossible(n);
    BoundVerdict w = weak_balanced_impossible(n);
    return json{{"n", n},
                {"balanced", b.impossible ? "impossible" : "unknown"},
                {"balanced_reason", b.reason},
                {"weak_balanced", w.impossible ? "impossible" : "unknown"},
                {"weak_balanced_reason", w.reason}};
}

int cmd_bounds(std::optional<int> n, std::optional<std::pair<int, int>> range,
               bool as_json) {
    std::vector<int> ns;
    if (n)
        ns.push_back(*n);
    else if (range)
        for (int x = range->first; x <= range->second; ++x)
            ns.push_back(x);
    else
        throw CLI::ValidationError("bounds", "need --n or --range");

    json rows = json::array();
    for (int x : ns)
        rows.push_back(bound_report(x));
    if (as_json) {
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto &r : rows)
            std::cout << "n=" << r["n"].get<int>()
                      << "  balanced: " << r["balanced"].get<std::string>()
                      << " (" << r["balanced_reason"].get<std::string>()
                      << ")  weak: " << r["weak_balanced"].get<std::string>()
                      << "\n";
    }
    if (ns.size() == 1)
        return balanced_impossible(ns[0]).impossible ? kExitValid
                                                     : kExitTimeout;
    return kExitValid;
}

int cmd_certificate(const std::string &file, int agent, int day,
                    const std::string &out) {
    RepeatedAssignment seq = load_sequence(file);
    PropCertificate cert;
    try {
        cert = build_prop1_certificate(seq, agent, day);
    } catch (const CertificateError &e) {
        std::cerr << "not (weakly) balanced at (agent " << agent << ", day "
                  << day << "): " << e.what() << "\n";
        return kExitInvalid;
    }
    if (!cert.verify())
        throw std::logic_error("certificate failed self-verification");
    if (out.empty()) {
        std::cout << cert.to_csv();
    } else {
        std::ofstream os(out);
        os << cert.to_csv();
        std::cerr << "wrote " << out << "\n";
    }
    return kExitValid;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fair repeated assignment toolkit: verifies balance "
                 "conditions on permutation sequences, constructs "
                 "top-balanced sequences, searches for balanced sequences, "
                 "and reports closed-form impossibility bounds."};
    app.require_subcommand(1);

    // verify
    std::string v_file, v_kind;
    int v_prop_c = -1;
    auto *verify = app.add_subcommand("verify", "Check a sequence file");
    verify->add_option("file", v_file, "sequence file (.csv or .json)")
        ->required();
    verify->add_option("--kind", v_kind,
                       "condition kind (top-balanced, balanced, "
                       "weak-balanced, prop2-strong, prop2-weak, "
                       "windowed-top)");
    verify->add_option("--prop-c", v_prop_c,
                       "also check perpetual ordinal PROP-c for this c");

    // generate
    int g_n = 0, g_days = 0;
    std::string g_algo = "top-balanced", g_valuation, g_out;
    std::optional<uint64_t> g_seed;
    auto *generate = app.add_subcommand("generate", "Build a sequence");
    generate->add_option("--n", g_n, "number of players/items")->required();
    generate->add_option("--algo", g_algo, "top-balanced or value-greedy")
        ->check(CLI::IsMember({"top-balanced", "value-greedy"}));
    generate->add_option("--seed", g_seed, "randomize arbitrary choices");
    generate->add_option("--valuation", g_valuation,
                         "JSON valuation file (value-greedy only)");
    generate->add_option("--days", g_days, "days to generate (value-greedy)");
    generate->add_option("--out", g_out, "output file")->required();

    // search
    SearchConfig cfg;
    std::string s_kind = "balanced", s_out, s_store = "results";
    bool s_no_sym = false, s_quiet = false;
    auto *search_cmd = app.add_subcommand("search", "Backtracking search");
    search_cmd->add_option("--n", cfg.n, "number of players/items")
        ->required();
    search_cmd->add_option("--kind", s_kind, "condition kind");
    search_cmd->add_option("--max-days", cfg.max_days, "depth limit");
    search_cmd->add_option("--timeout", cfg.timeout_seconds,
                           "wall-clock limit in seconds");
    search_cmd->add_option("--node-limit", cfg.node_limit, "node budget");
    search_cmd->add_option("--workers", cfg.workers, "parallel workers");
    search_cmd->add_flag("--deterministic", cfg.deterministic,
                         "reproducible witness (serial run)");
    search_cmd->add_flag("--no-symmetry-breaking", s_no_sym,
                         "do not fix day 1 to the identity");
    search_cmd->add_flag("--quiet", s_quiet, "suppress progress diagnostics");
    search_cmd->add_option("--out", s_out, "write a Sat witness here");
    search_cmd->add_option("--store", s_store, "result store directory");

    // bounds
    std::optional<int> b_n;
    std::optional<std::pair<int, int>> b_range;
    bool b_json = false;
    auto *bounds_cmd =
        app.add_subcommand("bounds", "Closed-form impossibility verdicts");
    bounds_cmd->add_option("--n", b_n, "single n");
    bounds_cmd->add_option("--range", b_range, "inclusive range a b");
    bounds_cmd->add_flag("--json", b_json, "JSON output");

    // certificate
    std::string c_file, c_out;
    int c_agent = 0, c_day = 0;
    auto *cert_cmd = app.add_subcommand(
        "certificate", "PROP1 dominance-mapping grid for one bundle");
    cert_cmd->add_option("file", c_file, "sequence file")->required();
    cert_cmd->add_option("--agent", c_agent, "player index")->required();
    cert_cmd->add_option("--day", c_day, "prefix day")->required();
    cert_cmd->add_option("--out", c_out, "output CSV (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify)
            return cmd_verify(v_file, v_kind, v_prop_c);
        if (*generate)
            return cmd_generate(g_n, g_algo, g_seed, g_valuation, g_days,
                                g_out);
        if (*search_cmd) {
            cfg.kind = parse_kind_or_throw(s_kind);
            cfg.symmetry_breaking = !s_no_sym;
            return cmd_search(cfg, s_out, s_store, s_quiet);
        }
        if (*bounds_cmd)
            return cmd_bounds(b_n, b_range, b_json);
        if (*cert_cmd)
            return cmd_certificate(c_file, c_agent, c_day, c_out);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
