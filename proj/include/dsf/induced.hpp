#pragma once

#include "dsf/canon.hpp"
#include "dsf/graph.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace dsf {

/// A pattern graph prepared for repeated induced-containment queries.
///
/// Matching backtracks over pattern vertices in a connectivity-first order,
/// filtering host candidates by degree windows and neighborhood bitsets.
/// Interchangeable pattern vertices (twins, identical components) are
/// forced into increasing host order so each embedding class is tried once.
class Pattern {
public:
    Pattern() = default;
    explicit Pattern(const Graph& g);

    [[nodiscard]] const Graph& graph() const noexcept { return original_; }
    [[nodiscard]] int order() const noexcept { return original_.order(); }
    [[nodiscard]] const Certificate& certificate() const noexcept { return cert_; }

    /// True iff some |V(pattern)|-subset of `host` induces a copy of the pattern.
    [[nodiscard]] bool induced_in(const Graph& host) const;

private:
    struct Step {
        std::uint8_t vertex = 0;      // pattern vertex placed at this depth
        std::uint8_t degree = 0;
        std::int8_t above = -1;       // earlier step whose image must be smaller
        VertexMask earlier_adj = 0;   // steps j < depth adjacent to this vertex
        VertexMask earlier_non = 0;   // steps j < depth not adjacent
    };

    [[nodiscard]] bool search(const Graph& host) const;

    Graph original_;
    Graph working_;  // original or its complement, whichever matches faster
    bool complemented_ = false;
    Certificate cert_;
    std::vector<Step> steps_;
    std::vector<int> sorted_degrees_;  // of working_, non-increasing
    int edges_ = 0;
};

bool induces(const Graph& host, const Graph& pattern);

/// Finite set of graphs deduplicated by isomorphism, in insertion order.
class ForbiddenSet {
public:
    ForbiddenSet() = default;
    explicit ForbiddenSet(const std::vector<Graph>& graphs);

    /// Returns false (and leaves the set unchanged) if an isomorphic member exists.
    bool add(const Graph& g);

    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] const Graph& operator[](std::size_t i) const { return members_[i].graph(); }
    [[nodiscard]] const Pattern& pattern(std::size_t i) const { return members_[i]; }
    [[nodiscard]] std::vector<Graph> graphs() const;
    [[nodiscard]] int max_order() const noexcept;

    /// Index of the first member induced in `host`, or -1.
    [[nodiscard]] int first_induced(const Graph& host) const;
    [[nodiscard]] bool is_free(const Graph& host) const { return first_induced(host) < 0; }

    [[nodiscard]] ForbiddenSet complemented() const;

private:
    std::vector<Pattern> members_;
};

bool is_free(const Graph& host, const ForbiddenSet& f);

/// Members of `s` that induce no other (non-isomorphic) member. Input order is kept.
std::vector<Graph> minimal_under_induced(const std::vector<Graph>& s);

/// True iff no member is induced in a different member.
bool is_antichain(const ForbiddenSet& f);

/// Per-worker cache of containment verdicts keyed by (labeled host, pattern).
class InducedMemo {
public:
    bool induces(const Graph& host, const Pattern& pattern);
    [[nodiscard]] std::size_t hits() const noexcept { return hits_; }
    [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }
    void clear() { table_.clear(); }

private:
    struct Key {
        Graph host;
        Certificate pattern;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return GraphHash{}(k.host) * 31 + CertificateHash{}(k.pattern);
        }
    };
    std::unordered_map<Key, bool, KeyHash> table_;
    std::size_t hits_ = 0;
};

}  // namespace dsf
