#include "dsf/dsf.hpp"

#include "dsf/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace dsf {

DsfVerdict is_dsf(const ForbiddenSet& f, SearchMode mode) {
    DsfVerdict verdict;
    verdict.witness = find_breaking_pair(f, mode);
    verdict.is_dsf = !verdict.witness.has_value();
    verdict.checked_bound = f.max_order() + 2;
    return verdict;
}

bool is_minimal_dsf(const ForbiddenSet& f, SearchMode mode) {
    if (f.empty())
        throw std::invalid_argument("minimality needs a non-empty set");
    if (f.size() >= 31)
        throw CapacityError("minimality check enumerates subsets of at most 30 graphs");
    std::uint32_t all = (std::uint32_t{1} << f.size()) - 1U;
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 1; s < all; ++s)
        subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (std::uint32_t s : subsets) {
        ForbiddenSet part;
        for (std::size_t i = 0; i < f.size(); ++i)
            if ((s >> i) & 1U)
                part.add(f[i]);
        if (is_dsf(part, mode).is_dsf)
            return false;
    }
    return is_dsf(f, mode).is_dsf;
}

namespace {

// Sorted degrees packed five bits apiece; orders stay within kMaxSieveOrder.
std::uint64_t degree_key(const Graph& g) {
    std::array<int, Graph::kCapacity> d{};
    int n = g.order();
    for (int v = 0; v < n; ++v)
        d[v] = g.degree(v);
    std::sort(d.begin(), d.begin() + n);
    std::uint64_t key = 0;
    for (int v = 0; v < n; ++v)
        key = (key << 5) | static_cast<std::uint64_t>(d[v]);
    return key;
}

bool induces_any(const Graph& host, const std::vector<Pattern>& patterns) {
    return std::any_of(patterns.begin(), patterns.end(), [&](const Pattern& p) { return p.induced_in(host); });
}

}  // namespace

SieveResult d_sieve(const ForbiddenSet& seed, int n_max, int workers) {
    if (seed.empty())
        throw std::invalid_argument("sieve needs a non-empty seed");
    if (!is_antichain(seed))
        throw std::invalid_argument("sieve seed must be an antichain under induced containment");
    if (n_max > kMaxSieveOrder)
        throw CapacityError("sieve order " + std::to_string(n_max) + " exceeds the supported bound " +
                            std::to_string(kMaxSieveOrder));
    if (n_max < 1)
        throw std::invalid_argument("sieve order must be positive");

    std::vector<Pattern> seeds;
    for (std::size_t i = 0; i < seed.size(); ++i)
        seeds.push_back(seed.pattern(i));

    SieveResult result;
    result.n_max = n_max;
    result.new_per_order.assign(static_cast<std::size_t>(n_max + 1), 0);
    std::vector<Pattern> members;
    std::vector<Graph> parents{Graph()};
    std::mutex lock;

    for (int n = 1; n <= n_max; ++n) {
        // The last level is streamed twice instead of stored.
        std::vector<Graph> level;
        bool stored = n < n_max;
        if (stored)
            level = extend_by_one_vertex(parents, workers);
        auto each = [&](const std::function<void(const Graph&)>& visit) {
            if (stored)
                for (const Graph& g : level)
                    visit(g);
            else
                for_each_extension(parents, workers, visit);
        };

        // A degree sequence is hit when one of its realizations induces a seed graph.
        std::unordered_set<std::uint64_t> hit;
        each([&](const Graph& g) {
            std::uint64_t key = degree_key(g);
            {
                std::lock_guard guard(lock);
                if (hit.count(key))
                    return;
            }
            if (induces_any(g, seeds)) {
                std::lock_guard guard(lock);
                hit.insert(key);
            }
        });

        // Minimal graphs in hit classes: no smaller sieve member is induced.
        std::vector<Graph> fresh;
        each([&](const Graph& g) {
            if (!hit.count(degree_key(g)) || induces_any(g, members))
                return;
            std::lock_guard guard(lock);
            fresh.push_back(g);
        });
        std::sort(fresh.begin(), fresh.end());
        result.new_per_order[n] = static_cast<int>(fresh.size());
        for (const Graph& g : fresh) {
            result.members.push_back(g);
            members.emplace_back(g);
        }
        if (stored)
            parents = std::move(level);
    }
    result.stabilized = result.new_per_order[n_max] == 0 && (n_max < 2 || result.new_per_order[n_max - 1] == 0);
    return result;
}

bool d_condition_check(const ForbiddenSet& f, int n_max, int workers) {
    SieveResult sieve = d_sieve(f, n_max, workers);
    if (sieve.members.size() != f.size())
        return false;
    ForbiddenSet found(sieve.members);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Certificate c = f.pattern(i).certificate();
        bool present = false;
        for (std::size_t j = 0; j < found.size() && !present; ++j)
            present = found.pattern(j).certificate() == c;
        if (!present)
            return false;
    }
    return true;
}

}  // namespace dsf
