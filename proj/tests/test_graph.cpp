#include "dsf/canon.hpp"
#include "dsf/expr.hpp"
#include "dsf/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dsf;

namespace {

Graph house_by_edges() {
    Graph g(5);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}})
        g.add_edge(u, v);
    return g;
}

std::vector<int> seq(const Graph& g) {
    return degree_sequence(g).degrees();
}

}  // namespace

TEST_CASE("named constructions") {
    CHECK(is_isomorphic(parse_expression("co(P3+K1)"), paw()));
    CHECK(seq(paw()) == std::vector{3, 2, 2, 1});
    CHECK(is_isomorphic(complement(path(5)), house_by_edges()));
    CHECK(is_isomorphic(parse_expression("house"), house_by_edges()));

    Graph two = disjoint_union(complete(1), complete(1));
    CHECK(two.order() == 2);
    CHECK(seq(two) == std::vector{0, 0});

    CHECK(parse_expression("K2,3") == complete_bipartite(2, 3));
    CHECK(parse_expression("3*K2") == copies(3, complete(2)));
    CHECK(parse_expression("3K2") == copies(3, complete(2)));
    CHECK(is_isomorphic(parse_expression("join(2K1,P4)"), join(Graph(2), path(4))));
    CHECK(parse_expression("4pan") == four_pan());
    CHECK(parse_expression("join(K2,3K1)").order() == 5);
    CHECK(parse_expression("join(K1,2,K1)").order() == 4);
    CHECK(parse_expression("join(2K1,8K2)").order() == 18);
    CHECK(parse_expression("co4pan") == co_four_pan());
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(parse_expression("K33"), CapacityError);
    CHECK_THROWS_AS(parse_expression("20K2"), CapacityError);
    CHECK_THROWS_AS(parse_expression("Q5"), ParseError);
    CHECK_THROWS_AS(parse_expression("co(K3"), ParseError);
    CHECK_THROWS_AS(parse_expression("K3 K3"), ParseError);
    CHECK_THROWS_AS(Graph(33), CapacityError);
    CHECK_NOTHROW(Graph(32));
}

TEST_CASE("complement") {
    CHECK(is_isomorphic(complement(cycle(4)), copies(2, complete(2))));
    CHECK(complement(complement(paw())) == paw());
    CHECK(is_isomorphic(complement(four_pan()), co_four_pan()));
    CHECK(complement(Graph()) == Graph());
}

TEST_CASE("degree sequences") {
    CHECK(seq(four_pan()) == std::vector{3, 2, 2, 2, 1});
    CHECK(seq(complete_bipartite(2, 3)) == std::vector{3, 3, 2, 2, 2});
    CHECK(seq(path(5)) == std::vector{2, 2, 2, 1, 1});
    CHECK(degree_sequence(path(5)) == degree_sequence(disjoint_union(complete(3), complete(2))));
    CHECK(degree_sequence(Graph()).size() == 0);
}

TEST_CASE("certificates") {
    Graph c4 = cycle(4);
    std::vector<int> perm{2, 0, 3, 1};
    CHECK(certificate(c4) == certificate(c4.relabeled(perm)));
    CHECK(degree_sequence(cycle(6)) == degree_sequence(copies(2, complete(3))));
    CHECK(certificate(cycle(6)) != certificate(copies(2, complete(3))));
    CHECK(certificate(Graph()) == certificate(Graph()));
    CHECK(certificate(Graph()).order() == 0);
    CHECK(certificate(Graph()) != certificate(Graph(1)));
}

TEST_CASE("isomorphism") {
    CHECK(is_isomorphic(path(4), complement(path(4))));
    CHECK_FALSE(is_isomorphic(cycle(6), copies(2, complete(3))));
    CHECK_FALSE(is_isomorphic(star(3), disjoint_union(complete(3), complete(1))));
}

TEST_CASE("certificate agrees with brute-force isomorphism on small graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_graph(rng, n);
        // Bias half the pairs toward equal degree sequences.
        Graph h = (trial % 2) ? oracle::random_relabel(rng, g) : oracle::random_graph(rng, n);
        if (trial % 3 == 0 && g.edge_count() > 1) {
            // A random 2-switch-like perturbation keeps many invariants equal.
            h = oracle::random_graph(rng, n, static_cast<double>(g.edge_count()) / (n * (n - 1) / 2 + 1));
        }
        CHECK(is_isomorphic(g, h) == oracle::isomorphic(g, h));
    }
}

TEST_CASE("certificate invariance under relabeling") {
    std::mt19937_64 rng(2024);
    std::vector<Graph> samples;
    for (int i = 0; i < 440; ++i) {
        int n = 1 + static_cast<int>(rng() % 20);
        double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
        samples.push_back(oracle::random_graph(rng, n, p));
    }
    // Highly symmetric graphs exercise automorphism pruning.
    for (const char* e : {"K9,9", "9K2", "6P3", "K1,17", "K1+K17", "co(9K2)", "3K3+3K2+K1", "C18",
                          "join(6K1,6K1)", "K3,3+K3,3", "co(6P3)", "4C4", "K17+K1", "2K1,5+K4+K2",
                          "P20", "18K1", "co(3C5)", "join(C5,C5)", "5*co4pan", "K6,6+3K2",
                          "co(K1,3+K1,3+K1,3+K1,3)", "join(3K2,K1,2+K1,2)", "house+house+house",
                          "C4+C4+C5+C6", "4P4", "K18", "join(K1,5K3)", "join(2K1,8K2)",
                          "co(K3+K3+P4+P4)", "2K2,3+2paw", "join(co(4K2),2P3)",
                          "co4pan+4pan+paw+paw", "K1,3+K1,3+K1,3+K1,3+K1,3",
                          "join(K1,join(K1,7K2))", "co(K4+K4+K4+K4)", "C20", "K1,19",
                          "3C6", "join(3K1,3K1)+join(3K1,3K1)", "P5+P5+P5+P5", "K4,4+K4,4+K2",
                          "co(2K1,5+K4+K2)", "2*co(5K2)", "join(K2,join(K2,join(K2,K2)))",
                          "2K5+2K5", "co(5P3)", "K2+K2+K2+C5+C5", "join(P4,P4)+join(P4,P4)",
                          "co(2C5)", "K10+K10", "co(K10+K10)", "join(4K2,4K2)", "5K1,2",
                          "co(5K1,2)", "6K3", "co(6K3)", "10K2", "co(10K2)", "4K1,3", "co(4K1,3)"})
        samples.push_back(parse_expression(e));
    REQUIRE(samples.size() >= 500);
    for (const Graph& g : samples) {
        Certificate base = certificate(g);
        CHECK(base.graph().order() == g.order());
        CHECK(base.graph().edge_count() == g.edge_count());
        CHECK(degree_sequence(base.graph()) == degree_sequence(g));
        for (int r = 0; r < 100; ++r)
            REQUIRE(certificate(oracle::random_relabel(rng, g)) == base);
    }
}

TEST_CASE("canonical labeling order maps the input onto the certificate") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 16));
        CanonicalLabeling lab = canonical_labeling(g);
        CHECK(g.relabeled(lab.order) == lab.certificate.graph());
        for (const Permutation& gamma : lab.generators) {
            std::vector<int> image(g.order());
            for (int v = 0; v < g.order(); ++v)
                image[gamma[v]] = v;
            CHECK(g.relabeled(image) == g);
        }
    }
}

TEST_CASE("graph6 decoding and encoding") {
    CHECK(parse_graph6("C~") == complete(4));
    CHECK(parse_graph6("?") == Graph());
    CHECK(graph6_labeled(path(4)) == "Ch");
    CHECK(graph6_labeled(complete(4)) == "C~");
    CHECK(parse_graph6(">>graph6<<C~\n") == complete(4));

    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C!"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~?@c"), CapacityError);
    CHECK_THROWS_AS(parse_graph6(std::string(1, static_cast<char>(63 + 40)) + std::string(130, '?')),
                    CapacityError);
    // Order 3 uses 3 of 6 bits; "Bp" sets a padding bit.
    CHECK(is_isomorphic(parse_graph6("Bo"), path(3)));
    CHECK_THROWS_AS(parse_graph6("Bp"), ParseError);
}

TEST_CASE("graph6 round trips") {
    // Every labeled graph on at most 5 vertices.
    for (int n = 0; n <= 5; ++n) {
        int slots = n * (n - 1) / 2;
        for (std::uint32_t bits = 0; bits < (1U << slots); ++bits) {
            Graph g(n);
            int k = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++k)
                    if ((bits >> k) & 1U)
                        g.add_edge(u, v);
            REQUIRE(parse_graph6(graph6_labeled(g)) == g);
        }
    }
    // Canonical emission is labeling-independent on up to 8 vertices.
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(rng, n);
        std::string s = graph6_labeled(oracle::random_relabel(rng, g));
        CHECK(emit_graph6(parse_graph6(s)) == emit_graph6(g));
        CHECK(parse_graph6(emit_graph6(g)) == certificate(g).graph());
    }
    Graph big = oracle::random_graph(rng, 32);
    CHECK(parse_graph6(graph6_labeled(big)) == big);
}

TEST_CASE("algebraic identities") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 12));
        Graph h = oracle::random_graph(rng, static_cast<int>(rng() % 12));
        int n = g.order();
        auto dg = seq(g);
        auto dc = seq(complement(g));
        for (int k = 0; k < n; ++k)
            CHECK(dc[k] == (n - 1) - dg[n - 1 - k]);

        auto merged = seq(g);
        auto dh = seq(h);
        merged.insert(merged.end(), dh.begin(), dh.end());
        std::sort(merged.begin(), merged.end(), std::greater<>());
        CHECK(seq(disjoint_union(g, h)) == merged);

        CHECK(complement(complement(g)) == g);
        CHECK(join(g, h) == complement(disjoint_union(complement(g), complement(h))));
        CHECK(degree_sequence(g).sum() == 2 * g.edge_count());
    }
}

TEST_CASE("components and induced subgraphs") {
    Graph g = parse_expression("P3+K2+K1");
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == 0b000111U);
    CHECK(comps[1] == 0b011000U);
    CHECK(comps[2] == 0b100000U);
    CHECK(g.induced(0b000101U) == Graph(2));
    CHECK(g.induced(0b000011U) == complete(2));
    CHECK(is_connected(cycle(5)));
    CHECK(is_connected(Graph()));
}

TEST_CASE("describe names") {
    CHECK(describe(complement(path(5))) == "house");
    CHECK(describe(complete_bipartite(3, 1)) == "K1,3");
    CHECK(describe(parse_expression("K1+P3")) == "P3+K1");
}
