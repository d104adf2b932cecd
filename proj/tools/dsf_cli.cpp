#include "dsf/canon.hpp"
#include "dsf/catalog.hpp"
#include "dsf/dsf.hpp"
#include "dsf/expr.hpp"
#include "dsf/parallel.hpp"
#include "dsf/report.hpp"
#include "dsf/triples.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace dsf;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Config {
    std::vector<std::string> graphs;
    std::string mode = "sound";
    std::string triples_mode = "paper-literal";
    int workers = 0;
    int n_max = 0;
    std::string data_dir;
    std::string json_path;
    std::string csv_path;
    std::string checkpoint;
    bool phase1_only = false;
    bool phase2_only = false;
    bool all = false;
    bool normalized = false;
    bool verify = false;
    int max_order = 5;
    bool no_timings = false;
};

ForbiddenSet parse_set(const std::vector<std::string>& args) {
    ForbiddenSet f;
    for (const auto& a : args)
        f.add(parse_graph_argument(a));
    return f;
}

std::string set_name(const ForbiddenSet& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i)
        out += (i ? ", " : "") + describe(f[i]);
    return out + "}";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

void write_json(const Config& cfg, const nlohmann::json& j) {
    if (!cfg.json_path.empty())
        write_file(cfg.json_path, j.dump(2) + "\n");
}

void print_pair(const BreakingPair& p, const ForbiddenSet& f) {
    std::cout << "H  = " << describe(p.h) << "  [" << graph6_labeled(p.h) << "]\n"
              << "H' = " << describe(p.h_prime) << "  [" << graph6_labeled(p.h_prime) << "]\n"
              << "degrees " << degree_sequence(p.h).to_string() << ", H induces " << describe(f[p.member])
              << ", switch (" << p.witness.a << "," << p.witness.b << "," << p.witness.c << "," << p.witness.d
              << ")\n";
}

int run_check(const Config& cfg) {
    ForbiddenSet f = parse_set(cfg.graphs);
    DsfVerdict v = is_dsf(f, parse_search_mode(cfg.mode));
    std::cout << set_name(f) << (v.is_dsf ? " is DSF" : " is not DSF") << " (hosts up to " << v.checked_bound
              << " vertices)\n";
    nlohmann::json j = {{"schema", kReportSchema}, {"set", set_name(f)}, {"dsf", v.is_dsf}, {"checked_bound", v.checked_bound}};
    if (v.witness) {
        print_pair(*v.witness, f);
        j["witness"] = breaking_pair_json(*v.witness, f);
    }
    write_json(cfg, j);
    return v.is_dsf ? kOk : kNegative;
}

int run_minimal(const Config& cfg) {
    ForbiddenSet f = parse_set(cfg.graphs);
    bool minimal = is_minimal_dsf(f, parse_search_mode(cfg.mode));
    std::cout << set_name(f) << (minimal ? " is a minimal DSF set\n" : " is not a minimal DSF set\n");
    write_json(cfg, {{"schema", kReportSchema}, {"set", set_name(f)}, {"minimal_dsf", minimal}});
    return minimal ? kOk : kNegative;
}

int run_break(const Config& cfg) {
    ForbiddenSet f = parse_set(cfg.graphs);
    BreakingSearchStats stats;
    auto hit = find_breaking_pair(f, parse_search_mode(cfg.mode), &stats);
    std::cerr << stats.hosts << " hosts, " << stats.switches << " switches examined\n";
    nlohmann::json j = {{"schema", kReportSchema}, {"set", set_name(f)}, {"found", hit.has_value()}};
    if (hit) {
        print_pair(*hit, f);
        j["pair"] = breaking_pair_json(*hit, f);
    } else {
        std::cout << "no breaking pair for " << set_name(f) << "\n";
    }
    write_json(cfg, j);
    return hit ? kOk : kNegative;
}

int run_sieve(const Config& cfg) {
    ForbiddenSet seed = parse_set(cfg.graphs);
    auto start = std::chrono::steady_clock::now();
    SieveResult r = d_sieve(seed, cfg.n_max, cfg.workers);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const Graph& g : r.members)
        std::cout << emit_graph6(g) << "\n";
    std::cerr << r.members.size() << " members up to " << r.n_max << " vertices"
              << (r.stabilized ? ", stabilized" : ", not stabilized") << " (" << secs << " s)\n";
    for (const Graph& g : r.members)
        std::cerr << "  " << describe(g) << "\n";
    write_json(cfg, sieve_json(r));
    return kOk;
}

int run_classify(const Config& cfg) {
    if (cfg.graphs.size() != 1)
        throw CLI::ValidationError("classify takes exactly one graph");
    Graph g = parse_graph_argument(cfg.graphs[0]);
    ClassMembership m = classify(g);
    std::cout << describe(g) << " on " << g.order() << " vertices, " << g.edge_count() << " edges\n";
    nlohmann::json flags;
    for (GraphClass c : kAllClasses) {
        std::cout << "  " << to_string(c) << (m.in(c) ? "  yes" : "  no") << "\n";
        flags[std::string(to_string(c))] = m.in(c);
    }
    nlohmann::json params;
    if (m.bipartite) {
        std::cout << "  K_{a1,a2}: a1=" << (*m.bipartite)[0] << " a2=" << (*m.bipartite)[1] << "\n";
        params["a"] = *m.bipartite;
    }
    if (m.cliques) {
        std::cout << "  K_b1+K_b2: b1=" << (*m.cliques)[0] << " b2=" << (*m.cliques)[1] << "\n";
        params["b"] = *m.cliques;
    }
    if (m.k) {
        std::cout << "  K: c1=" << m.k->c1 << " c2=" << m.k->c2 << " c3=" << m.k->c3 << "\n";
        params["k"] = {m.k->c1, m.k->c2, m.k->c3};
    }
    if (m.kc) {
        std::cout << "  Kc: c1=" << m.kc->c1 << " c2=" << m.kc->c2 << " c3=" << m.kc->c3 << "\n";
        params["kc"] = {m.kc->c1, m.kc->c2, m.kc->c3};
    }
    write_json(cfg, {{"schema", kReportSchema}, {"graph", graph_json(g)}, {"classes", flags}, {"parameters", params}});
    return kOk;
}

Phase2Options phase2_options(const Config& cfg) {
    Phase2Options o;
    o.mode = parse_search_mode(cfg.mode);
    o.workers = cfg.workers;
    if (!cfg.checkpoint.empty())
        o.checkpoint = cfg.checkpoint;
    o.progress = [](std::size_t done, std::size_t total) {
        if (done % 250 == 0 || done == total)
            std::cerr << "\rphase II " << done << "/" << total << std::flush;
        if (done == total)
            std::cerr << "\n";
    };
    return o;
}

std::optional<UnigraphCriterion> try_criterion() {
    try {
        return UnigraphCriterion::load_default();
    } catch (const DataError& e) {
        std::cerr << "warning: " << e.what() << "; skipping unigraph cross-checks\n";
        return std::nullopt;
    }
}

int run_triples(Config cfg) {
    cfg.mode = cfg.triples_mode;
    int chosen = cfg.phase1_only + cfg.phase2_only + cfg.all;
    if (chosen != 1)
        throw CLI::ValidationError("choose one of --phase1, --phase2, --all");
    Phase1Options p1 = cfg.normalized ? phase1_normalized() : phase1_literal();
    bool timings = !cfg.no_timings;

    if (cfg.phase1_only) {
        auto start = std::chrono::steady_clock::now();
        auto candidates = phase1(p1);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << candidates.size() << " candidates\n";
        SearchReport r;
        r.candidate_count = candidates.size();
        r.candidates = std::move(candidates);
        r.timings_s["phase1"] = secs;
        write_json(cfg, report_json(r, timings));
        return kOk;
    }
    if (cfg.phase2_only) {
        auto candidates = phase1(p1);
        std::cerr << candidates.size() << " candidates\n";
        SearchReport r = phase2(candidates, phase2_options(cfg));
        std::cout << render_text(r);
        write_json(cfg, report_json(r, timings));
        if (!cfg.csv_path.empty())
            write_file(cfg.csv_path, catalog_csv(r.catalog));
        return kOk;
    }
    auto criterion = try_criterion();
    TriplesTheorem t = reproduce_triples_theorem(phase2_options(cfg), criterion ? &*criterion : nullptr);
    std::cout << render_text(t);
    write_json(cfg, theorem_json(t, timings));
    if (!cfg.csv_path.empty())
        write_file(cfg.csv_path, catalog_csv(t.search.catalog));
    return kOk;
}

int run_pairs(const Config& cfg) {
    if (!cfg.verify)
        throw CLI::ValidationError("pairs needs --verify");
    PairsList list = PairsList::load_default();
    PairsAudit audit = audit_pairs_list(list, cfg.max_order, cfg.workers);
    std::cout << audit.graphs << " graphs, " << audit.sets << " sets, " << audit.mismatches.size()
              << " disagreements\n";
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& s : audit.mismatches) {
        ForbiddenSet f(s);
        std::cout << "  " << set_name(f) << "\n";
        bad.push_back(set_name(f));
    }
    write_json(cfg, {{"schema", kReportSchema}, {"graphs", audit.graphs}, {"sets", audit.sets}, {"disagreements", bad}});
    return audit.mismatches.empty() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree-sequence-forcing sets of forbidden induced subgraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--workers", cfg.workers, "Worker threads (default: DSF_WORKERS or hardware threads)")
        ->check(CLI::PositiveNumber);
    app.add_option("--data-dir", cfg.data_dir, "Directory with criterion16.g6 and pairs_list.g6")
        ->envname("DSF_DATA_DIR");
    app.add_option("--json", cfg.json_path, "Write a JSON artifact here");

    auto graphs_arg = [&](CLI::App* sub) {
        sub->add_option("graphs", cfg.graphs, "Graphs as named expressions (K3, P3+K1, K2,3, co(P5)) or graph6")
            ->required();
    };
    auto mode_arg = [&](CLI::App* sub) {
        sub->add_option("--mode", cfg.mode, "sound or paper-literal")->check(CLI::IsMember({"sound", "paper-literal"}));
    };

    auto* check = app.add_subcommand("check", "Decide whether a set is DSF; exit 1 if not");
    graphs_arg(check);
    mode_arg(check);
    auto* minimal = app.add_subcommand("minimal", "Decide whether a set is a minimal DSF set; exit 1 if not");
    graphs_arg(minimal);
    mode_arg(minimal);
    auto* brk = app.add_subcommand("break", "Search for a breaking pair; exit 1 if none");
    graphs_arg(brk);
    mode_arg(brk);
    auto* sieve = app.add_subcommand("sieve", "Compute D(G) up to a vertex bound");
    graphs_arg(sieve);
    sieve->add_option("--n-max", cfg.n_max, "Largest order examined")
        ->required()
        ->check(CLI::Range(1, 12));
    auto* cls = app.add_subcommand("classify", "Report membership in B, Bc, K, Kc, S, Sc");
    graphs_arg(cls);
    auto* triples = app.add_subcommand("triples", "Search for minimal DSF triples");
    triples->add_flag("--phase1", cfg.phase1_only, "Generate candidates only");
    triples->add_flag("--phase2", cfg.phase2_only, "Generate and test candidates");
    triples->add_flag("--all", cfg.all, "Full reproduction including the small cases");
    triples->add_option("--mode", cfg.triples_mode, "Phase II search mode (default paper-literal)")
        ->check(CLI::IsMember({"sound", "paper-literal"}));
    triples->add_flag("--normalized", cfg.normalized, "Drop repeated candidates");
    triples->add_option("--csv", cfg.csv_path, "Write the breaking-pair catalog as CSV");
    triples->add_option("--checkpoint", cfg.checkpoint, "Resume file for phase II verdicts");
    triples->add_flag("--no-timings", cfg.no_timings, "Leave timings out of the JSON artifact");
    auto* pairs = app.add_subcommand("pairs", "Audit the DSF pairs list");
    pairs->add_flag("--verify", cfg.verify, "Compare the list with the breaking-pair search");
    pairs->add_option("--max-order", cfg.max_order, "Largest graph order in the audit")->check(CLI::Range(1, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (!cfg.data_dir.empty())
        setenv("DSF_DATA_DIR", cfg.data_dir.c_str(), 1);
    if (cfg.workers == 0)
        cfg.workers = default_workers();

    try {
        if (check->parsed())
            return run_check(cfg);
        if (minimal->parsed())
            return run_minimal(cfg);
        if (brk->parsed())
            return run_break(cfg);
        if (sieve->parsed())
            return run_sieve(cfg);
        if (cls->parsed())
            return run_classify(cfg);
        if (triples->parsed())
            return run_triples(cfg);
        if (pairs->parsed())
            return run_pairs(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "bad graph: " << e.what() << "\n";
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
