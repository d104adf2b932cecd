#include "dsf/triples.hpp"

#include "dsf/canon.hpp"
#include "dsf/dsf.hpp"
#include "dsf/expr.hpp"

#include "dsf/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

namespace dsf {

std::string_view to_string(Origin o) {
    switch (o) {
    case Origin::K: return "K";
    case Origin::Kc: return "Kc";
    case Origin::S: return "S";
    case Origin::Sc: return "Sc";
    case Origin::small_case: return "small-case";
    }
    return "?";
}

std::string_view to_string(Gate g) {
    switch (g) {
    case Gate::none: return "none";
    case Gate::not_antichain: return "not-antichain";
    case Gate::contains_dsf_pair: return "contains-2K2-C4";
    }
    return "?";
}

std::array<Graph, 3> canonical_triple(const std::array<Graph, 3>& t) {
    std::array<Graph, 3> out;
    for (int i = 0; i < 3; ++i)
        out[i] = certificate(t[i]).graph();
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Partitions of n into non-increasing parts, largest first part first.
void partitions(int n, int max_part, std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& f) {
    if (n == 0) {
        f(prefix);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions(n - p, p, prefix, f);
        prefix.pop_back();
    }
}

std::vector<Graph> clique_family(int n3, CliqueFamilySize rule, int& oversized) {
    std::vector<Graph> out;
    for (int c3 = 0; c3 <= n3; ++c3) {
        if (c3 == 1 || c3 == 2)
            continue;
        int step = rule == CliqueFamilySize::vertex_count ? 2 : 1;
        for (int c2 = 0; c3 + step * c2 <= n3; ++c2) {
            int c1 = n3 - c3 - step * c2;
            if (c1 + 2 * c2 + c3 > Graph::kCapacity) {
                ++oversized;
                continue;
            }
            out.push_back(clique_union({c1, c2, c3}));
        }
    }
    return out;
}

std::vector<Graph> star_family(int n3) {
    std::vector<Graph> out;
    std::vector<int> prefix;
    partitions(n3, n3, prefix, [&](const std::vector<int>& parts) { out.push_back(star_forest(parts)); });
    return out;
}

}  // namespace

Phase1Options phase1_literal() {
    return {};
}

Phase1Options phase1_normalized() {
    Phase1Options o = phase1_literal();
    o.dedup = true;
    return o;
}

std::vector<CandidateTriple> phase1(const Phase1Options& options, Phase1Stats* stats) {
    Phase1Stats local;
    Phase1Stats& counters = stats ? *stats : local;
    constexpr int kMin = 4;
    const int kMax = order_bound(3);

    std::vector<CandidateTriple> out;
    std::set<std::array<Graph, 3>> seen;
    std::map<int, std::vector<Graph>> cliques;
    std::map<int, std::vector<Graph>> stars;

    auto family = [&](Origin o, int n3) {
        std::vector<Graph> members;
        if (o == Origin::K || o == Origin::Kc) {
            auto& base = cliques[n3];
            if (base.empty())
                base = clique_family(n3, options.clique_size, counters.oversized);
            members = base;
        } else {
            auto& base = stars[n3];
            if (base.empty())
                base = star_family(n3);
            members = base;
        }
        if (o == Origin::Kc || o == Origin::Sc)
            for (Graph& g : members)
                g = complement(g);
        return members;
    };

    for (int a1 = 1; 2 * a1 <= kMax; ++a1)
        for (int a2 = std::max(a1, kMin - a1); a1 + a2 <= kMax; ++a2) {
            Graph f1 = complete_bipartite(a1, a2);
            ClassMembership m1 = classify(f1);
            int n1 = a1 + a2;
            for (int b1 = 1; 2 * b1 <= kMax; ++b1)
                for (int b2 = std::max(b1, kMin - b1); b1 + b2 <= kMax; ++b2) {
                    Graph f2 = disjoint_union(complete(b1), complete(b2));
                    ClassMembership m2 = classify(f2);
                    int n2 = b1 + b2;
                    if ((a1 <= 1 && b1 <= 1) || (a1 == 2 && a2 == 2 && b1 == 2 && b2 == 2))
                        continue;
                    auto either = [&](GraphClass c) { return m1.in(c) || m2.in(c); };
                    if (!either(GraphClass::S) && !either(GraphClass::Sc))
                        continue;

                    std::optional<Origin> origin;
                    if (!either(GraphClass::K))
                        origin = Origin::K;
                    else if (!either(GraphClass::Kc))
                        origin = Origin::Kc;
                    else if (!either(GraphClass::S))
                        origin = Origin::S;
                    else if (!either(GraphClass::Sc))
                        origin = Origin::Sc;
                    if (!origin)
                        continue;

                    for (int n3 = kMin; n3 <= kMax; ++n3) {
                        std::array<SizeProfile, 3> orders{SizeProfile{n1, 0}, SizeProfile{n2, 0}, SizeProfile{n3, 0}};
                        if (!vertex_gap_ok(orders))
                            continue;
                        for (const Graph& f3 : family(*origin, n3)) {
                            std::array<SizeProfile, 3> sizes{size_profile(f1), size_profile(f2), size_profile(f3)};
                            if (!edge_gap_ok(sizes))
                                continue;
                            if (*origin == Origin::K) {
                                if (options.k_bound == KBranchBound::edge_sum && !edge_sum_ok(sizes))
                                    continue;
                                if (options.k_bound == KBranchBound::order_caps && !order_bounds_ok(sizes))
                                    continue;
                            }
                            std::array<ClassMembership, 3> ms{m1, m2, classify(f3)};
                            if (!covers_all_classes(std::span<const ClassMembership>(ms)))
                                continue;
                            CandidateTriple t{{f1, f2, f3}, *origin};
                            if (options.dedup && !seen.insert(canonical_triple(t.graphs)).second)
                                continue;
                            out.push_back(std::move(t));
                        }
                    }
                }
        }
    return out;
}

Phase2Verdict test_candidate(const CandidateTriple& c, SearchMode mode) {
    Phase2Verdict v;
    ForbiddenSet f(std::vector<Graph>(c.graphs.begin(), c.graphs.end()));
    if (f.size() < 3 || !is_antichain(f)) {
        v.gate = Gate::not_antichain;
        return v;
    }
    Certificate two_k2 = certificate(copies(2, complete(2)));
    Certificate c4 = certificate(cycle(4));
    bool has_two_k2 = false;
    bool has_c4 = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        has_two_k2 = has_two_k2 || f.pattern(i).certificate() == two_k2;
        has_c4 = has_c4 || f.pattern(i).certificate() == c4;
    }
    if (has_two_k2 && has_c4) {
        v.gate = Gate::contains_dsf_pair;
        return v;
    }
    v.witness = find_breaking_pair(f, mode);
    if (!v.witness && mode != SearchMode::sound)
        v.witness = find_breaking_pair(f, SearchMode::sound);
    v.is_dsf = !v.witness;
    return v;
}

namespace {

std::string fingerprint(const std::vector<CandidateTriple>& candidates, SearchMode mode) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    };
    mix(std::string(to_string(mode)));
    for (const auto& c : candidates)
        for (const Graph& g : c.graphs)
            mix(graph6_labeled(g) + " ");
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string checkpoint_line(std::size_t index, const Phase2Verdict& v) {
    std::ostringstream out;
    out << index << ' ' << to_string(v.gate) << ' ' << (v.is_dsf ? 1 : 0);
    if (v.witness) {
        const BreakingPair& p = *v.witness;
        out << ' ' << graph6_labeled(p.h) << ' ' << graph6_labeled(p.h_prime) << ' ' << p.member << ' '
            << p.witness.a << ' ' << p.witness.b << ' ' << p.witness.c << ' ' << p.witness.d << ' ' << p.added;
    }
    return out.str();
}

std::optional<std::pair<std::size_t, Phase2Verdict>> parse_checkpoint_line(const std::string& line) {
    std::istringstream in(line);
    std::size_t index = 0;
    std::string gate;
    int dsf = 0;
    if (!(in >> index >> gate >> dsf))
        return std::nullopt;
    Phase2Verdict v;
    if (gate == "not-antichain")
        v.gate = Gate::not_antichain;
    else if (gate == "contains-2K2-C4")
        v.gate = Gate::contains_dsf_pair;
    else if (gate != "none")
        return std::nullopt;
    v.is_dsf = dsf != 0;
    std::string h;
    std::string hp;
    if (in >> h >> hp) {
        BreakingPair p;
        try {
            p.h = parse_graph6(h);
            p.h_prime = parse_graph6(hp);
        } catch (const ParseError&) {
            return std::nullopt;
        }
        if (!(in >> p.member >> p.witness.a >> p.witness.b >> p.witness.c >> p.witness.d >> p.added))
            return std::nullopt;
        v.witness = p;
    }
    return std::make_pair(index, v);
}

}  // namespace

SearchReport phase2(const std::vector<CandidateTriple>& candidates, const Phase2Options& options) {
    auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.candidate_count = candidates.size();
    report.candidates = candidates;
    report.verdicts.assign(candidates.size(), {});
    std::vector<bool> done(candidates.size(), false);

    std::string header = "# dsf-phase2 v1 " + std::to_string(candidates.size()) + " " +
                         fingerprint(candidates, options.mode);
    std::ofstream log;
    if (options.checkpoint) {
        bool resume = false;
        if (std::ifstream in(*options.checkpoint); in) {
            std::string line;
            if (std::getline(in, line) && line == header) {
                resume = true;
                while (std::getline(in, line)) {
                    auto entry = parse_checkpoint_line(line);
                    if (!entry || entry->first >= candidates.size())
                        continue;  // a torn last line from an interrupted run
                    report.verdicts[entry->first] = entry->second;
                    done[entry->first] = true;
                }
            }
        }
        log.open(*options.checkpoint, resume ? std::ios::app : std::ios::trunc);
        if (!log)
            throw DataError("cannot write checkpoint " + options.checkpoint->string());
        if (!resume)
            log << header << "\n" << std::flush;
    }

    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (!done[i])
            todo.push_back(i);
    std::mutex lock;
    std::size_t finished = candidates.size() - todo.size();
    parallel_for(todo.size(), options.workers ? options.workers : default_workers(), [&](std::size_t k) {
        std::size_t i = todo[k];
        Phase2Verdict v = test_candidate(candidates[i], options.mode);
        std::lock_guard guard(lock);
        report.verdicts[i] = v;
        if (log.is_open())
            log << checkpoint_line(i, v) << "\n" << std::flush;
        ++finished;
        if (options.progress)
            options.progress(finished, candidates.size());
    });

    std::map<std::pair<Certificate, Certificate>, int> uses;
    std::set<std::array<Graph, 3>> survivors;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Phase2Verdict& v = report.verdicts[i];
        if (v.witness)
            ++uses[{certificate(v.witness->h), certificate(v.witness->h_prime)}];
        if (v.is_dsf)
            survivors.insert(canonical_triple(candidates[i].graphs));
    }
    for (const auto& [key, n] : uses)
        report.catalog.push_back({key.first, key.second, n});
    report.dsf_triples.assign(survivors.begin(), survivors.end());
    report.timings_s["phase2"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<SmallCaseResult> small_case_triples(const UnigraphCriterion* criterion) {
    std::vector<SmallCaseResult> out;
    std::vector<std::array<Graph, 3>> with_k3;
    for (auto names : {std::array<const char*, 3>{"K3", "P3+K1", "K1,3"}, std::array<const char*, 3>{"K3", "P3+K1", "C4"},
                       std::array<const char*, 3>{"K3", "P3+K1", "K2,3"}, std::array<const char*, 3>{"K3", "2K2", "K1,3"}}) {
        std::array<Graph, 3> t;
        for (int i = 0; i < 3; ++i)
            t[i] = parse_expression(names[i]);
        with_k3.push_back(t);
    }
    std::vector<std::array<Graph, 3>> all = with_k3;
    for (const auto& t : with_k3)
        all.push_back({complement(t[0]), complement(t[1]), complement(t[2])});
    for (const auto& t : all) {
        SmallCaseResult r;
        r.triple = {t, Origin::small_case};
        ForbiddenSet f(std::vector<Graph>(t.begin(), t.end()));
        r.is_dsf = is_dsf(f).is_dsf;
        r.is_minimal = r.is_dsf && is_minimal_dsf(f);
        if (criterion)
            r.criterion = criterion->holds(f);
        out.push_back(std::move(r));
    }
    return out;
}

TriplesTheorem reproduce_triples_theorem(const Phase2Options& options, const UnigraphCriterion* criterion) {
    TriplesTheorem result;
    auto start = std::chrono::steady_clock::now();
    std::vector<CandidateTriple> candidates = phase1(phase1_literal());
    double p1 = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.search = phase2(candidates, options);
    result.search.timings_s["phase1"] = p1;
    result.small_cases = small_case_triples(criterion);

    std::set<std::array<Graph, 3>> found;
    for (const auto& t : result.search.dsf_triples)
        found.insert(t);
    for (const auto& r : result.small_cases)
        if (r.is_dsf)
            found.insert(canonical_triple(r.triple.graphs));
    auto verify = std::chrono::steady_clock::now();
    for (const auto& t : found)
        if (is_minimal_dsf(ForbiddenSet(std::vector<Graph>(t.begin(), t.end()))))
            result.triples.push_back(t);
    result.search.timings_s["minimality"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - verify).count();
    return result;
}

}  // namespace dsf
