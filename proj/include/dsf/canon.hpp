#pragma once

#include "dsf/graph.hpp"

#include <array>
#include <compare>
#include <vector>

namespace dsf {

/// Exact isomorphism-class key: the canonically relabeled graph.
class Certificate {
public:
    Certificate() = default;
    /// Wraps a graph that is already in canonical form; no check is made.
    static Certificate adopt(const Graph& canonical) { return Certificate(canonical); }

    [[nodiscard]] const Graph& graph() const noexcept { return canonical_; }
    [[nodiscard]] int order() const noexcept { return canonical_.order(); }

    friend bool operator==(const Certificate&, const Certificate&) = default;
    friend bool operator<(const Certificate& a, const Certificate& b) noexcept {
        return a.canonical_ < b.canonical_;
    }

private:
    explicit Certificate(Graph canonical) : canonical_(canonical) {}
    Graph canonical_;
};

struct CertificateHash {
    std::size_t operator()(const Certificate& c) const noexcept { return GraphHash{}(c.graph()); }
};

using Permutation = std::array<std::int8_t, Graph::kCapacity>;

struct CanonicalLabeling {
    Certificate certificate;
    /// order[i] is the input vertex placed at canonical position i.
    std::vector<int> order;
    /// Automorphisms found during the search; image[v] of each.
    std::vector<Permutation> generators;
};

/// Individualization-refinement search with automorphism pruning.
CanonicalLabeling canonical_labeling(const Graph& g);

Certificate certificate(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

/// Orbits of the group generated by `generators` (representative = smallest vertex).
std::vector<int> orbit_representatives(int n, const std::vector<Permutation>& generators);

}  // namespace dsf
