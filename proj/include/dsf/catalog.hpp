#pragma once

#include "dsf/induced.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dsf {

/// B: complete bipartite (edgeless graphs count as K_{0,n}); K: disjoint
/// unions of cliques with at most one clique on more than two vertices;
/// S: forests of stars. The *c classes hold their complements.
enum class GraphClass { B, Bc, K, Kc, S, Sc };

inline constexpr std::array<GraphClass, 6> kAllClasses = {GraphClass::B, GraphClass::Bc, GraphClass::K,
                                                          GraphClass::Kc, GraphClass::S, GraphClass::Sc};

std::string_view to_string(GraphClass c);
GraphClass complement_class(GraphClass c);

/// Parameters of K_{c3} + c2 K2 + c1 K1 with c3 = 0 or c3 >= 3.
struct CliqueParams {
    int c1 = 0;
    int c2 = 0;
    int c3 = 0;
    friend bool operator==(const CliqueParams&, const CliqueParams&) = default;
};

struct ClassMembership {
    std::array<bool, 6> flags{};
    std::optional<std::array<int, 2>> bipartite;  // a1 <= a2 when in B
    std::optional<std::array<int, 2>> cliques;    // b1 <= b2 when in Bc
    std::optional<CliqueParams> k;                // when in K
    std::optional<CliqueParams> kc;               // of the complement, when in Kc
    std::vector<int> stars;                       // component orders, descending, when in S
    std::vector<int> co_stars;                    // same for the complement, when in Sc

    [[nodiscard]] bool in(GraphClass c) const { return flags[static_cast<std::size_t>(c)]; }
};

ClassMembership classify(const Graph& g);

/// Whether the graphs jointly hit all six classes.
bool covers_all_classes(std::span<const Graph> graphs);
bool covers_all_classes(std::span<const ClassMembership> classes);

// Constructors for the parameterized families.
Graph clique_union(const CliqueParams& p);             // K_{c3} + c2 K2 + c1 K1
Graph star_forest(std::span<const int> component_orders);  // part s becomes K_{1,s-1}

/// Largest order of a member of a minimal DSF k-set:
/// floor(4k - 3/2 + sqrt(8k^2 + 2k - 31/4)), computed exactly.
int order_bound(int k);
/// Largest order of the smallest member: floor(2k + 1/2 + sqrt(8k^2 + 2k - 31/4)).
int smallest_order_bound(int k);

struct SizeProfile {
    int order = 0;
    int edges = 0;
};

/// Sorted by order, consecutive orders differ by at most two.
bool vertex_gap_ok(std::span<const SizeProfile> sizes);
/// Sorted by edge count, each next count is at most max over earlier j of e_j + 2 n_j.
bool edge_gap_ok(std::span<const SizeProfile> sizes);
/// Sorted by edge count, each next count is at most e_1 + 2 (n_1 + ... + n_i).
bool edge_sum_ok(std::span<const SizeProfile> sizes);
/// Sorted by order, the i-th order is at most smallest_order_bound(k) + 2(i-1).
bool order_bounds_ok(std::span<const SizeProfile> sizes);
/// All four of the above.
bool gap_bounds_ok(std::span<const SizeProfile> sizes);

SizeProfile size_profile(const Graph& g);

/// Directory holding criterion16.g6 and pairs_list.g6: DSF_DATA_DIR when
/// set, otherwise the source tree's data directory.
std::filesystem::path default_data_dir();

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lines of whitespace-separated graph6 strings; '#' starts a comment line.
std::vector<std::vector<Graph>> read_graph6_sets(const std::filesystem::path& file);

/// DSF sets of at most two graphs.
class PairsList {
public:
    /// Throws DataError when the file is missing or lacks the three singletons.
    static PairsList load(const std::filesystem::path& file);
    static PairsList load_default() { return load(default_data_dir() / "pairs_list.g6"); }

    [[nodiscard]] const std::vector<std::vector<Certificate>>& sets() const noexcept { return sets_; }
    /// True iff some listed set is contained in f. Requires |f| <= 2.
    [[nodiscard]] bool verdict(const ForbiddenSet& f) const;

private:
    std::vector<std::vector<Certificate>> sets_;
};

struct PairsAudit {
    std::size_t graphs = 0;
    std::size_t sets = 0;
    std::vector<std::vector<Graph>> mismatches;  // sets where is_dsf and the list disagree
};

/// Compares is_dsf with the list on every set of one or two non-isomorphic
/// graphs with 1..max_order vertices each.
PairsAudit audit_pairs_list(const PairsList& list, int max_order = 5, int workers = 0);

/// The sixteen graphs every element of which must induce a member of F
/// for all F-free graphs to be unigraphs.
class UnigraphCriterion {
public:
    /// Throws DataError unless the file holds 16 distinct graphs, is closed
    /// under complement, and contains the twelve graphs named in the statement.
    static UnigraphCriterion load(const std::filesystem::path& file);
    static UnigraphCriterion load_default() { return load(default_data_dir() / "criterion16.g6"); }

    [[nodiscard]] const std::vector<Graph>& graphs() const noexcept { return graphs_; }
    [[nodiscard]] bool holds(const ForbiddenSet& f) const;

private:
    std::vector<Graph> graphs_;
};

/// The twelve graphs of the criterion with explicit names, in statement order.
std::vector<Graph> named_criterion_graphs();

/// Unigraph test by 2-switch closure.
bool is_unigraph(const Graph& g);

}  // namespace dsf
