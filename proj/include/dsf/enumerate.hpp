#pragma once

#include "dsf/graph.hpp"

#include <functional>
#include <vector>

namespace dsf {

/// Calls visit(child) once for every graph of order n+1 up to isomorphism,
/// given `parents` = all graphs of order n in canonical form. A child is
/// kept only when deleting its canonically last vertex gives back its
/// parent, and siblings are deduplicated. Children arrive canonical, in an
/// order that depends on scheduling; `visit` may be called concurrently.
void for_each_extension(const std::vector<Graph>& parents, int workers,
                        const std::function<void(const Graph&)>& visit);

/// Every graph of order n+1 as canonical forms in ascending order.
std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& parents, int workers = 0);

/// All graphs of orders 0..n up to isomorphism; level k holds order k.
std::vector<std::vector<Graph>> graphs_up_to(int n, int workers = 0);

}  // namespace dsf
