#pragma once

#include "dsf/induced.hpp"
#include "dsf/switch.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace dsf {

/// Which host sizes the breaking-pair search tries around each member.
///   sound          0, 1 or 2 added vertices (complete decision procedure)
///   paper_literal  1 or 2 added vertices only
enum class SearchMode { sound, paper_literal };

std::string_view to_string(SearchMode mode);
/// Accepts "sound" and "paper-literal" (or "literal"); throws std::invalid_argument.
SearchMode parse_search_mode(std::string_view text);

/// (H, H'): equal degree sequences, H induces member `member` of the set,
/// H' is free of every member, and H' = apply_switch(H, witness).
struct BreakingPair {
    Graph h;
    Graph h_prime;
    int member = -1;
    TwoSwitch witness;
    int added = 0;  // vertices of H outside the member copy
};

struct BreakingSearchStats {
    std::uint64_t hosts = 0;
    std::uint64_t switches = 0;
};

/// First breaking pair in search order, or nullopt when none exists
/// within the locality bound (for the sound mode: iff the set is DSF).
///
/// Search order: members by ascending order (ties by index), then the
/// number of added vertices ascending, then edge subsets of the added
/// vertices in integer order, then normalized switches in lexicographic
/// order. Bit v of an edge subset joins the first added vertex to member
/// vertex v, bit n+v joins the second, and bit 2n joins the two added
/// vertices. Subsets that differ only by permuting twin vertices of the
/// member give isomorphic hosts; only the smallest of each such family
/// is visited, which leaves the first hit unchanged.
///
/// Throws std::invalid_argument for an empty set or an order-0 member.
/// `prune_twins` exists for testing the pruning; results are identical either way.
std::optional<BreakingPair> find_breaking_pair(const ForbiddenSet& f, SearchMode mode = SearchMode::sound,
                                               BreakingSearchStats* stats = nullptr, bool prune_twins = true);

/// Re-checks every defining property of a breaking pair from scratch.
bool is_breaking_pair(const BreakingPair& p, const ForbiddenSet& f);

/// Checks (H, H') without a recorded switch or member index.
bool is_breaking_pair(const Graph& h, const Graph& h_prime, const ForbiddenSet& f);

}  // namespace dsf
