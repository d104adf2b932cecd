#pragma once

#include "dsf/breaking.hpp"
#include "dsf/induced.hpp"

#include <optional>
#include <vector>

namespace dsf {

struct DsfVerdict {
    bool is_dsf = false;
    std::optional<BreakingPair> witness;
    int checked_bound = 0;  // largest host order examined
};

DsfVerdict is_dsf(const ForbiddenSet& f, SearchMode mode = SearchMode::sound);

/// DSF, and no proper non-empty subset is DSF. Subsets are tried smallest first.
bool is_minimal_dsf(const ForbiddenSet& f, SearchMode mode = SearchMode::sound);

/// Largest n_max the sieve accepts. Every graph of each order up to n_max
/// is visited, so the cost grows with the number of graphs on n_max vertices.
inline constexpr int kMaxSieveOrder = 10;

struct SieveResult {
    std::vector<Graph> members;      // canonical, by order then adjacency
    int n_max = 0;
    bool stabilized = false;         // nothing new at orders n_max-1 and n_max
    std::vector<int> new_per_order;  // index = order
};

/// Graphs on at most n_max vertices whose degree sequence has a realization
/// inducing a seed graph, and none of whose proper induced subgraphs has
/// that property.
///
/// Throws std::invalid_argument if the seed is empty or not an antichain,
/// and CapacityError if n_max exceeds kMaxSieveOrder.
SieveResult d_sieve(const ForbiddenSet& seed, int n_max, int workers = 0);

/// Bounded check of D(F) = F: the sieve up to n_max returns exactly F.
bool d_condition_check(const ForbiddenSet& f, int n_max, int workers = 0);

}  // namespace dsf
