#pragma once

#include "dsf/breaking.hpp"
#include "dsf/catalog.hpp"

#include <array>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dsf {

/// Where a candidate's third graph came from.
enum class Origin { K, Kc, S, Sc, small_case };
std::string_view to_string(Origin o);

struct CandidateTriple {
    std::array<Graph, 3> graphs;  // F1 in B, F2 in Bc, F3 from `origin`
    Origin origin = Origin::K;
};

/// How the third graph's order is read in the clique-union families.
///   component_count  c1 + c2 + c3 = n3, as the loop is written
///   vertex_count     c1 + 2 c2 + c3 = n3, so the graph has n3 vertices
enum class CliqueFamilySize { component_count, vertex_count };

/// Extra size test applied, besides the edge-gap bound, when the third
/// graph is drawn from K.
///   none         nothing more
///   edge_sum     e'_{i+1} <= e'_1 + 2 (n'_1 + ... + n'_i)
///   order_caps   smallest orders at most 14, 16, 18
enum class KBranchBound { none, edge_sum, order_caps };

struct Phase1Options {
    CliqueFamilySize clique_size = CliqueFamilySize::vertex_count;
    KBranchBound k_bound = KBranchBound::order_caps;
    /// Drop triples already emitted, compared as sets of isomorphism classes.
    bool dedup = false;
};

struct Phase1Stats {
    /// Family members skipped because they have more than Graph::kCapacity
    /// vertices (possible only with CliqueFamilySize::component_count).
    int oversized = 0;
};

/// Phase I candidate generation, loops in the order
/// (a1, a2) -> (b1, b2) -> n3 -> third-graph family member.
std::vector<CandidateTriple> phase1(const Phase1Options& options = {}, Phase1Stats* stats = nullptr);

/// Options reproducing the published candidate count, and the same with dedup.
Phase1Options phase1_literal();
Phase1Options phase1_normalized();

enum class Gate { none, not_antichain, contains_dsf_pair };
std::string_view to_string(Gate g);

struct Phase2Verdict {
    Gate gate = Gate::none;
    bool is_dsf = false;
    std::optional<BreakingPair> witness;
};

/// A breaking pair in the catalog, keyed by the certificates of H and H'.
struct CatalogEntry {
    Certificate h;
    Certificate h_prime;
    int uses = 0;
};

struct SearchReport {
    std::size_t candidate_count = 0;
    std::vector<CandidateTriple> candidates;
    std::vector<Phase2Verdict> verdicts;  // parallel to candidates
    std::vector<std::array<Graph, 3>> dsf_triples;
    std::vector<CatalogEntry> catalog;    // by (h, h_prime)
    std::map<std::string, double> timings_s;
};

struct Phase2Options {
    SearchMode mode = SearchMode::paper_literal;
    int workers = 0;
    /// Verdicts are appended here as they finish and read back on restart.
    std::optional<std::filesystem::path> checkpoint;
    std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Gate checks, then the breaking-pair search, per candidate. Survivors of
/// the paper-literal search are re-checked in sound mode.
SearchReport phase2(const std::vector<CandidateTriple>& candidates, const Phase2Options& options = {});

Phase2Verdict test_candidate(const CandidateTriple& c, SearchMode mode);

struct SmallCaseResult {
    CandidateTriple triple;
    bool is_dsf = false;
    bool is_minimal = false;
    std::optional<bool> criterion;  // when criterion data is available
};

/// The four triples containing K3 and their four complements.
std::vector<SmallCaseResult> small_case_triples(const UnigraphCriterion* criterion = nullptr);

struct TriplesTheorem {
    std::vector<std::array<Graph, 3>> triples;  // canonical members, sorted
    SearchReport search;
    std::vector<SmallCaseResult> small_cases;
};

TriplesTheorem reproduce_triples_theorem(const Phase2Options& options = {},
                                         const UnigraphCriterion* criterion = nullptr);

/// Members canonicalized and sorted, for comparing triples as sets.
std::array<Graph, 3> canonical_triple(const std::array<Graph, 3>& t);

}  // namespace dsf
