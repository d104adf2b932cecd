#include "dsf/dsf.hpp"
#include "dsf/enumerate.hpp"
#include "dsf/expr.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace dsf;

namespace {

ForbiddenSet fs(std::initializer_list<const char*> exprs) {
    ForbiddenSet f;
    for (const char* e : exprs)
        f.add(parse_expression(e));
    return f;
}

bool same_classes(const std::vector<Graph>& a, const std::vector<Graph>& b) {
    if (a.size() != b.size())
        return false;
    for (const Graph& x : a)
        if (std::none_of(b.begin(), b.end(), [&](const Graph& y) { return oracle::isomorphic(x, y); }))
            return false;
    return true;
}

}  // namespace

TEST_CASE("enumerator counts graphs up to isomorphism") {
    auto levels = graphs_up_to(8, 1);
    std::vector<std::size_t> counts;
    for (const auto& level : levels)
        counts.push_back(level.size());
    CHECK(counts == std::vector<std::size_t>{1, 1, 2, 4, 11, 34, 156, 1044, 12346});
    for (const auto& level : levels)
        CHECK(std::is_sorted(level.begin(), level.end()));
    for (std::size_t i = 0; i < levels[5].size(); ++i)
        for (std::size_t j = i + 1; j < levels[5].size(); ++j)
            CHECK_FALSE(oracle::isomorphic(levels[5][i], levels[5][j]));
}

TEST_CASE("worker count does not change enumeration") {
    auto one = graphs_up_to(7, 1);
    auto many = graphs_up_to(7, 3);
    CHECK(one == many);
}

TEST_CASE("is_dsf on known sets") {
    CHECK(is_dsf(fs({"2K2", "C4"})).is_dsf);
    CHECK(is_dsf(fs({"K1"})).is_dsf);
    CHECK(is_dsf(fs({"P3", "K3"})).is_dsf);
    DsfVerdict v = is_dsf(fs({"K3"}));
    CHECK_FALSE(v.is_dsf);
    REQUIRE(v.witness.has_value());
    CHECK(v.checked_bound == 5);
    CHECK(is_breaking_pair(*v.witness, fs({"K3"})));
}

TEST_CASE("minimal DSF") {
    CHECK(is_minimal_dsf(fs({"2K2", "C4"})));
    CHECK(is_minimal_dsf(fs({"K1"})));
    CHECK_FALSE(is_minimal_dsf(fs({"K3"})));
    // {K2} alone is DSF, so adding anything breaks minimality.
    CHECK_FALSE(is_minimal_dsf(fs({"K2", "K3"})));
    CHECK_THROWS_AS(is_minimal_dsf(ForbiddenSet()), std::invalid_argument);
}

TEST_CASE("sieve of K3 up to nine vertices") {
    SieveResult r = d_sieve(fs({"K3"}), 9, 1);
    std::vector<Graph> expected = fs({"K3", "P5", "4pan", "K2,3", "K2+C4", "K2+C5", "P3+P4", "3P3"}).graphs();
    CHECK(same_classes(r.members, expected));
    CHECK_FALSE(r.stabilized);
    CHECK(r.new_per_order[9] == 1);
    CHECK(is_dsf(ForbiddenSet(r.members)).is_dsf);
}

TEST_CASE("sieve fixed points") {
    SieveResult r = d_sieve(fs({"K2"}), 4, 1);
    REQUIRE(r.members.size() == 1);
    CHECK(is_isomorphic(r.members[0], complete(2)));
    CHECK(r.stabilized);
    CHECK(d_condition_check(fs({"2K2", "C4"}), 8, 1));
    CHECK(d_condition_check(fs({"K1"}), 4, 1));
    CHECK_FALSE(d_condition_check(fs({"K3"}), 6, 1));
}

TEST_CASE("sieve preconditions") {
    CHECK_THROWS_AS(d_sieve(ForbiddenSet(), 4), std::invalid_argument);
    CHECK_THROWS_AS(d_sieve(fs({"K2", "K3"}), 4), std::invalid_argument);
    CHECK_THROWS_AS(d_sieve(fs({"K3"}), kMaxSieveOrder + 1), CapacityError);
}

TEST_CASE("sieve agrees with exhaustive oracle") {
    std::mt19937_64 rng(11);
    auto levels = graphs_up_to(4, 1);
    std::vector<Graph> pool;
    for (int n = 2; n <= 4; ++n)
        pool.insert(pool.end(), levels[n].begin(), levels[n].end());
    for (int trial = 0; trial < 25; ++trial) {
        ForbiddenSet seed;
        seed.add(pool[rng() % pool.size()]);
        if (rng() % 2)
            seed.add(pool[rng() % pool.size()]);
        if (!is_antichain(seed))
            continue;
        auto expected = oracle::d_sieve_by_exhaustion(seed.graphs(), 6);
        SieveResult r = d_sieve(seed, 6, 1);
        CHECK(same_classes(r.members, expected));
        // Every seed graph survives, and the result is an antichain.
        for (const Graph& s : seed.graphs())
            CHECK(std::any_of(r.members.begin(), r.members.end(), [&](const Graph& m) { return is_isomorphic(m, s); }));
        CHECK(is_antichain(ForbiddenSet(r.members)));
    }
}
