#include "dsf/catalog.hpp"

#include "dsf/canon.hpp"
#include "dsf/dsf.hpp"
#include "dsf/enumerate.hpp"
#include "dsf/parallel.hpp"
#include "dsf/expr.hpp"
#include "dsf/switch.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace dsf {

std::string_view to_string(GraphClass c) {
    switch (c) {
    case GraphClass::B: return "B";
    case GraphClass::Bc: return "Bc";
    case GraphClass::K: return "K";
    case GraphClass::Kc: return "Kc";
    case GraphClass::S: return "S";
    case GraphClass::Sc: return "Sc";
    }
    return "?";
}

GraphClass complement_class(GraphClass c) {
    switch (c) {
    case GraphClass::B: return GraphClass::Bc;
    case GraphClass::Bc: return GraphClass::B;
    case GraphClass::K: return GraphClass::Kc;
    case GraphClass::Kc: return GraphClass::K;
    case GraphClass::S: return GraphClass::Sc;
    case GraphClass::Sc: return GraphClass::S;
    }
    return c;
}

namespace {

// Component orders when every component is a clique, else nullopt.
std::optional<std::vector<int>> clique_sizes(const Graph& g) {
    std::vector<int> sizes;
    for (VertexMask comp : components(g)) {
        int k = std::popcount(comp);
        for (VertexMask m = comp; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (g.degree(v) != k - 1)
                return std::nullopt;
        }
        sizes.push_back(k);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

std::optional<std::vector<int>> star_sizes(const Graph& g) {
    std::vector<int> sizes;
    for (VertexMask comp : components(g)) {
        int k = std::popcount(comp);
        int edges = 0;
        int centers = 0;
        for (VertexMask m = comp; m; m &= m - 1) {
            int d = g.degree(std::countr_zero(m));
            edges += d;
            centers += d >= 2;
        }
        if (edges / 2 != k - 1 || centers > 1)
            return std::nullopt;
        sizes.push_back(k);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

std::optional<CliqueParams> k_params(const std::optional<std::vector<int>>& sizes) {
    if (!sizes)
        return std::nullopt;
    CliqueParams p;
    for (int s : *sizes) {
        if (s >= 3) {
            if (p.c3)
                return std::nullopt;
            p.c3 = s;
        } else if (s == 2) {
            ++p.c2;
        } else {
            ++p.c1;
        }
    }
    return p;
}

std::optional<std::array<int, 2>> two_cliques(const std::optional<std::vector<int>>& sizes) {
    if (!sizes || sizes->size() > 2)
        return std::nullopt;
    std::array<int, 2> b{0, 0};
    if (sizes->size() == 1)
        b[1] = (*sizes)[0];
    else if (sizes->size() == 2)
        b = {(*sizes)[1], (*sizes)[0]};
    return b;
}

}  // namespace

ClassMembership classify(const Graph& g) {
    Graph co = complement(g);
    auto own = clique_sizes(g);
    auto other = clique_sizes(co);

    ClassMembership m;
    m.cliques = two_cliques(own);
    m.bipartite = two_cliques(other);
    m.k = k_params(own);
    m.kc = k_params(other);
    if (auto s = star_sizes(g))
        m.stars = *s;
    if (auto s = star_sizes(co))
        m.co_stars = *s;
    bool s = star_sizes(g).has_value();
    bool sc = star_sizes(co).has_value();
    m.flags = {m.bipartite.has_value(), m.cliques.has_value(), m.k.has_value(), m.kc.has_value(), s, sc};
    return m;
}

bool covers_all_classes(std::span<const ClassMembership> classes) {
    for (GraphClass c : kAllClasses)
        if (std::none_of(classes.begin(), classes.end(), [&](const ClassMembership& m) { return m.in(c); }))
            return false;
    return true;
}

bool covers_all_classes(std::span<const Graph> graphs) {
    std::vector<ClassMembership> classes;
    for (const Graph& g : graphs)
        classes.push_back(classify(g));
    return covers_all_classes(std::span<const ClassMembership>(classes));
}

Graph clique_union(const CliqueParams& p) {
    Graph g = complete(p.c3);
    g = disjoint_union(g, copies(p.c2, complete(2)));
    return disjoint_union(g, empty_graph(p.c1));
}

Graph star_forest(std::span<const int> component_orders) {
    Graph g;
    for (int s : component_orders) {
        if (s < 1)
            throw std::invalid_argument("star components need at least one vertex");
        g = disjoint_union(g, s == 1 ? complete(1) : star(s - 1));
    }
    return g;
}

namespace {

// Largest integer m with m <= (offset + sqrt(32k^2 + 8k - 31)) / 2, where
// offset is the doubled rational part.
int floor_half_sqrt_plus(long offset, int k) {
    long disc = 32L * k * k + 8L * k - 31;
    if (disc < 0)
        throw std::invalid_argument("bound needs k >= 1");
    long m = 0;
    // 2m - offset <= sqrt(disc)
    auto fits = [&](long x) {
        long lhs = 2 * x - offset;
        return lhs < 0 || lhs * lhs <= disc;
    };
    while (fits(m + 1))
        ++m;
    return static_cast<int>(m);
}

}  // namespace

int order_bound(int k) {
    if (k < 1)
        throw std::invalid_argument("bound needs k >= 1");
    return floor_half_sqrt_plus(8L * k - 3, k);
}

int smallest_order_bound(int k) {
    if (k < 1)
        throw std::invalid_argument("bound needs k >= 1");
    return floor_half_sqrt_plus(4L * k + 1, k);
}

namespace {

std::vector<SizeProfile> by_order(std::span<const SizeProfile> sizes) {
    std::vector<SizeProfile> s(sizes.begin(), sizes.end());
    std::stable_sort(s.begin(), s.end(), [](const SizeProfile& a, const SizeProfile& b) { return a.order < b.order; });
    return s;
}

std::vector<SizeProfile> by_edges(std::span<const SizeProfile> sizes) {
    std::vector<SizeProfile> s(sizes.begin(), sizes.end());
    std::stable_sort(s.begin(), s.end(), [](const SizeProfile& a, const SizeProfile& b) {
        return a.edges != b.edges ? a.edges < b.edges : a.order < b.order;
    });
    return s;
}

}  // namespace

bool vertex_gap_ok(std::span<const SizeProfile> sizes) {
    auto s = by_order(sizes);
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].order - s[i - 1].order > 2)
            return false;
    return true;
}

bool edge_gap_ok(std::span<const SizeProfile> sizes) {
    auto s = by_edges(sizes);
    int reach = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        reach = std::max(reach, s[i].edges + 2 * s[i].order);
        if (s[i + 1].edges > reach)
            return false;
    }
    return true;
}

bool edge_sum_ok(std::span<const SizeProfile> sizes) {
    auto s = by_edges(sizes);
    if (s.empty())
        return true;
    int total = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        total += s[i].order;
        if (s[i + 1].edges > s[0].edges + 2 * total)
            return false;
    }
    return true;
}

bool order_bounds_ok(std::span<const SizeProfile> sizes) {
    auto s = by_order(sizes);
    if (s.empty())
        return true;
    int first = smallest_order_bound(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i].order > first + 2 * static_cast<int>(i))
            return false;
    return true;
}

bool gap_bounds_ok(std::span<const SizeProfile> sizes) {
    return vertex_gap_ok(sizes) && edge_gap_ok(sizes) && edge_sum_ok(sizes) && order_bounds_ok(sizes);
}

SizeProfile size_profile(const Graph& g) {
    return {g.order(), g.edge_count()};
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("DSF_DATA_DIR"); env && *env)
        return env;
    return DSF_DEFAULT_DATA_DIR;
}

std::vector<std::vector<Graph>> read_graph6_sets(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw DataError("cannot open data file " + file.string());
    std::vector<std::vector<Graph>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream words(line);
        std::vector<Graph> set;
        std::string word;
        while (words >> word) {
            try {
                set.push_back(parse_graph6(word));
            } catch (const ParseError& e) {
                throw DataError(file.string() + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (!set.empty())
            out.push_back(std::move(set));
    }
    return out;
}

PairsList PairsList::load(const std::filesystem::path& file) {
    PairsList list;
    for (const auto& set : read_graph6_sets(file)) {
        if (set.size() > 2)
            throw DataError(file.string() + ": sets hold at most two graphs");
        std::vector<Certificate> certs;
        for (const Graph& g : set)
            certs.push_back(certificate(g));
        std::sort(certs.begin(), certs.end());
        list.sets_.push_back(std::move(certs));
    }
    for (const Graph& g : {complete(1), complete(2), empty_graph(2)}) {
        Certificate c = certificate(g);
        bool listed = std::any_of(list.sets_.begin(), list.sets_.end(),
                                  [&](const auto& s) { return s.size() == 1 && s[0] == c; });
        if (!listed)
            throw DataError(file.string() + ": missing the singleton " + describe(g));
    }
    return list;
}

bool PairsList::verdict(const ForbiddenSet& f) const {
    if (f.size() > 2)
        throw std::invalid_argument("pairs list covers sets of at most two graphs");
    std::vector<Certificate> mine;
    for (std::size_t i = 0; i < f.size(); ++i)
        mine.push_back(f.pattern(i).certificate());
    for (const auto& s : sets_) {
        bool inside = std::all_of(s.begin(), s.end(), [&](const Certificate& c) {
            return std::find(mine.begin(), mine.end(), c) != mine.end();
        });
        if (inside)
            return true;
    }
    return false;
}

PairsAudit audit_pairs_list(const PairsList& list, int max_order, int workers) {
    auto levels = graphs_up_to(max_order, workers);
    std::vector<Graph> pool;
    for (int n = 1; n <= max_order; ++n)
        pool.insert(pool.end(), levels[n].begin(), levels[n].end());
    std::vector<std::vector<Graph>> sets;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        sets.push_back({pool[i]});
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            sets.push_back({pool[i], pool[j]});
    }
    PairsAudit audit;
    audit.graphs = pool.size();
    audit.sets = sets.size();
    std::vector<char> bad(sets.size(), 0);
    parallel_for(sets.size(), workers ? workers : default_workers(), [&](std::size_t k) {
        ForbiddenSet f(sets[k]);
        bad[k] = is_dsf(f).is_dsf != list.verdict(f);
    });
    for (std::size_t k = 0; k < sets.size(); ++k)
        if (bad[k])
            audit.mismatches.push_back(sets[k]);
    return audit;
}

std::vector<Graph> named_criterion_graphs() {
    std::vector<Graph> out;
    for (const char* e : {"P5", "house", "K2+K3", "K2,3", "4pan", "co4pan", "2P3", "join(K2+K1,K2+K1)", "K2+P4",
                          "join(2K1,P4)", "K2+C4", "join(2K1,2K2)"})
        out.push_back(parse_expression(e));
    return out;
}

UnigraphCriterion UnigraphCriterion::load(const std::filesystem::path& file) {
    UnigraphCriterion crit;
    for (const auto& set : read_graph6_sets(file))
        crit.graphs_.insert(crit.graphs_.end(), set.begin(), set.end());
    if (crit.graphs_.size() != 16)
        throw DataError(file.string() + ": expected 16 graphs, found " + std::to_string(crit.graphs_.size()));
    std::vector<Certificate> certs;
    for (const Graph& g : crit.graphs_)
        certs.push_back(certificate(g));
    std::vector<Certificate> sorted = certs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DataError(file.string() + ": repeated graph");
    auto listed = [&](const Graph& g) { return std::binary_search(sorted.begin(), sorted.end(), certificate(g)); };
    for (const Graph& g : crit.graphs_)
        if (!listed(complement(g)))
            throw DataError(file.string() + ": not closed under complement (" + emit_graph6(g) + ")");
    for (const Graph& g : named_criterion_graphs())
        if (!listed(g))
            throw DataError(file.string() + ": missing " + describe(g));
    return crit;
}

bool UnigraphCriterion::holds(const ForbiddenSet& f) const {
    return std::all_of(graphs_.begin(), graphs_.end(), [&](const Graph& g) { return !f.is_free(g); });
}

bool is_unigraph(const Graph& g) {
    return all_realizations(degree_sequence(g)).size() == 1;
}

}  // namespace dsf
