#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsf {

class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using VertexMask = std::uint32_t;

/// Small simple graph stored as one adjacency bitset per vertex.
///
/// Equality is labeled equality. Use `is_isomorphic` or compare
/// certificates when the labeling should not matter.
class Graph {
public:
    static constexpr int kCapacity = 32;

    Graph() = default;
    explicit Graph(int n);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] VertexMask vertices() const noexcept { return full_mask(n_); }
    [[nodiscard]] VertexMask neighbors(int v) const noexcept { return rows_[v]; }
    [[nodiscard]] bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
    [[nodiscard]] int degree(int v) const noexcept { return std::popcount(rows_[v]); }
    [[nodiscard]] int edge_count() const noexcept;
    [[nodiscard]] std::span<const VertexMask> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(n_)}; }
    /// All kCapacity rows; rows at positions >= order() are zero.
    [[nodiscard]] const std::array<VertexMask, kCapacity>& row_array() const noexcept { return rows_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    /// Appends `count` isolated vertices.
    void add_vertices(int count);

    /// G[W] with vertices renumbered in increasing order of W.
    [[nodiscard]] Graph induced(VertexMask keep) const;
    /// Vertex v of the result is vertex perm[v] of this graph.
    [[nodiscard]] Graph relabeled(std::span<const int> perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;
    /// Total order: by order, then rows lexicographically. Used for canonical sorting.
    friend bool operator<(const Graph& a, const Graph& b) noexcept;

    static constexpr VertexMask full_mask(int n) noexcept {
        return n >= 32 ? ~VertexMask{0} : ((VertexMask{1} << n) - 1U);
    }

private:
    std::array<VertexMask, kCapacity> rows_{};
    int n_ = 0;
};

struct GraphHash {
    std::size_t operator()(const Graph& g) const noexcept;
};

/// Non-increasing list of vertex degrees.
class DegreeSequence {
public:
    DegreeSequence() = default;
    /// Sorts the input into non-increasing order.
    explicit DegreeSequence(std::vector<int> degrees);

    [[nodiscard]] const std::vector<int>& degrees() const noexcept { return degrees_; }
    [[nodiscard]] std::size_t size() const noexcept { return degrees_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return degrees_[i]; }
    [[nodiscard]] int sum() const noexcept;
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> degrees_;
};

struct DegreeSequenceHash {
    std::size_t operator()(const DegreeSequence& d) const noexcept;
};

DegreeSequence degree_sequence(const Graph& g);

// Constructors and graph algebra.
Graph complete(int n);
Graph empty_graph(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph copies(int m, const Graph& g);
Graph paw();
Graph four_pan();
Graph co_four_pan();
Graph house();

/// Component vertex masks, ordered by smallest vertex.
std::vector<VertexMask> components(const Graph& g);
bool is_connected(const Graph& g);

Graph parse_graph6(std::string_view text);
/// graph6 of the graph as labeled.
std::string graph6_labeled(const Graph& g);
/// graph6 of the canonical relabeling, identical for isomorphic graphs.
std::string emit_graph6(const Graph& g);

}  // namespace dsf
