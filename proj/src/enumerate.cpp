#include "dsf/enumerate.hpp"

#include "dsf/canon.hpp"
#include "dsf/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

namespace dsf {

namespace {

std::vector<Graph> children_of(const Graph& parent) {
    int n = parent.order();
    if (n + 1 > Graph::kCapacity)
        throw CapacityError("cannot extend past " + std::to_string(Graph::kCapacity) + " vertices");
    std::unordered_set<Graph, GraphHash> kept;
    VertexMask last_subset = Graph::full_mask(n);
    for (VertexMask nbrs = 0;; ++nbrs) {
        Graph child = parent;
        child.add_vertices(1);
        for (VertexMask m = nbrs; m; m &= m - 1)
            child.add_edge(n, std::countr_zero(m));
        CanonicalLabeling lab = canonical_labeling(child);
        int last = lab.order.back();
        bool accept = last == n;
        if (!accept) {
            Graph rest = child.induced(child.vertices() & ~(VertexMask{1} << last));
            accept = certificate(rest).graph() == parent;
        }
        if (accept)
            kept.insert(lab.certificate.graph());
        if (nbrs == last_subset)
            break;
    }
    return {kept.begin(), kept.end()};
}

}  // namespace

void for_each_extension(const std::vector<Graph>& parents, int workers,
                        const std::function<void(const Graph&)>& visit) {
    parallel_for(parents.size(), workers, [&](std::size_t i) {
        for (const Graph& child : children_of(parents[i]))
            visit(child);
    });
}

std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& parents, int workers) {
    std::vector<std::vector<Graph>> slots(parents.size());
    parallel_for(parents.size(), workers, [&](std::size_t i) { slots[i] = children_of(parents[i]); });
    std::vector<Graph> out;
    for (auto& s : slots)
        out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Graph>> graphs_up_to(int n, int workers) {
    std::vector<std::vector<Graph>> levels{{Graph()}};
    for (int k = 1; k <= n; ++k)
        levels.push_back(extend_by_one_vertex(levels.back(), workers));
    return levels;
}

}  // namespace dsf
