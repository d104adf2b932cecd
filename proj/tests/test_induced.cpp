#include "dsf/expr.hpp"
#include "dsf/induced.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace dsf;

namespace {

Graph g(const char* expr) {
    return parse_expression(expr);
}

std::vector<Graph> gs(std::initializer_list<const char*> exprs) {
    std::vector<Graph> out;
    for (const char* e : exprs)
        out.push_back(g(e));
    return out;
}

bool same_classes(const std::vector<Graph>& a, const std::vector<Graph>& b) {
    if (a.size() != b.size())
        return false;
    for (const Graph& x : a) {
        bool found = false;
        for (const Graph& y : b)
            found = found || is_isomorphic(x, y);
        if (!found)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("induced containment examples") {
    CHECK(induces(house(), complete(3)));
    CHECK_FALSE(induces(four_pan(), complete(3)));
    CHECK(induces(Graph(), Graph()));
    CHECK(induces(cycle(5), Graph()));
    CHECK(induces(g("K1"), g("K1")));
    CHECK_FALSE(induces(Graph(), g("K1")));
    CHECK_FALSE(induces(cycle(4), g("2K2")));
    CHECK(induces(g("3P3"), g("P3+K1")));
    CHECK_FALSE(induces(g("3P3"), g("P4")));
    CHECK(induces(g("K2+C5"), g("3K1")));
    CHECK(induces(g("join(3K1,3K1)"), g("C4")));
}

TEST_CASE("is_free examples") {
    CHECK(is_free(path(5), ForbiddenSet({complete(3)})));
    CHECK(is_free(g("K2+K3"), ForbiddenSet({path(3)})));
    CHECK_FALSE(is_free(g("2K2"), ForbiddenSet(gs({"2K2", "C4"}))));
    ForbiddenSet f(gs({"K3", "P4", "C4"}));
    CHECK(f.first_induced(g("house")) == 0);
    CHECK(f.first_induced(g("P5")) == 1);
    CHECK(f.first_induced(g("2K2+K1")) == -1);
}

TEST_CASE("forbidden sets deduplicate by isomorphism") {
    ForbiddenSet f;
    CHECK(f.add(path(4)));
    CHECK_FALSE(f.add(complement(path(4))));
    CHECK(f.add(cycle(4)));
    CHECK(f.size() == 2);
    CHECK(f.max_order() == 4);
    ForbiddenSet co = f.complemented();
    CHECK(is_isomorphic(co[1], g("2K2")));
}

TEST_CASE("minimal elements under induced containment") {
    CHECK(same_classes(minimal_under_induced(gs({"K3", "paw", "K4"})), gs({"K3"})));
    CHECK(same_classes(minimal_under_induced(gs({"2K2", "C4"})), gs({"2K2", "C4"})));
    CHECK(minimal_under_induced({}).empty());
    CHECK(same_classes(minimal_under_induced(gs({"P5", "P3", "K3", "house"})), gs({"P3", "K3"})));
}

TEST_CASE("antichains") {
    CHECK(is_antichain(ForbiddenSet(gs({"K3+K1", "C4", "P3+K1"}))));
    CHECK_FALSE(is_antichain(ForbiddenSet(gs({"P3", "P5"}))));
    CHECK(is_antichain(ForbiddenSet(gs({"K3"}))));
}

TEST_CASE("matcher agrees with subset enumeration") {
    std::mt19937_64 rng(42);
    int positives = 0;
    for (int trial = 0; trial < 6000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        int k = 1 + static_cast<int>(rng() % 6);
        double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        Graph host = oracle::random_graph(rng, n, p);
        Graph pattern = oracle::random_graph(rng, k, p);
        if (trial % 4 == 0 && k <= n) {
            // Plant the pattern on a random subset so positives are common.
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            pattern = oracle::random_relabel(rng, host.induced([&] {
                VertexMask m = 0;
                for (int i = 0; i < k; ++i)
                    m |= VertexMask{1} << perm[i];
                return m;
            }()));
        }
        bool want = oracle::induces(host, pattern);
        positives += want;
        REQUIRE(induces(host, pattern) == want);
        REQUIRE(induces(complement(host), complement(pattern)) == want);
    }
    CHECK(positives > 1000);
}

TEST_CASE("matcher on symmetric patterns") {
    std::mt19937_64 rng(8);
    const char* patterns[] = {"4K2", "3P3", "K1,4", "join(3K1,3K1)", "2K3", "co(3K2)", "5K1",
                              "K2+3K1", "2P3+2K1", "C4+C4", "K3,3", "co(2P3)", "K2+K2+K3"};
    for (int trial = 0; trial < 1500; ++trial) {
        Graph pattern = g(patterns[trial % std::size(patterns)]);
        int n = pattern.order() + static_cast<int>(rng() % 4);
        if (n > 10)
            n = 10;
        double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        Graph host = oracle::random_graph(rng, n, p);
        if (trial % 3 == 0 && pattern.order() <= n) {
            Graph planted = disjoint_union(pattern, Graph(n - pattern.order()));
            for (int v = pattern.order(); v < n; ++v)
                for (int u = 0; u < v; ++u)
                    if (rng() % 2)
                        planted.add_edge(u, v);
            host = oracle::random_relabel(rng, planted);
        }
        REQUIRE(induces(host, pattern) == oracle::induces(host, pattern));
    }
}

TEST_CASE("induced containment is transitive") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 3000; ++trial) {
        Graph a = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 5));
        Graph b = a.induced(static_cast<VertexMask>(rng()) & a.vertices());
        Graph c = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 4));
        b = oracle::random_relabel(rng, b);
        REQUIRE(induces(a, b));
        if (induces(b, c))
            REQUIRE(induces(a, c));
    }
}

TEST_CASE("memoized containment matches direct containment") {
    std::mt19937_64 rng(5);
    InducedMemo memo;
    Pattern p4(path(4));
    Pattern c4(cycle(4));
    std::vector<Graph> hosts;
    for (int i = 0; i < 200; ++i)
        hosts.push_back(oracle::random_graph(rng, 6));
    for (int round = 0; round < 2; ++round)
        for (const Graph& h : hosts) {
            CHECK(memo.induces(h, p4) == p4.induced_in(h));
            CHECK(memo.induces(h, c4) == c4.induced_in(h));
        }
    CHECK(memo.hits() >= 400);
}
