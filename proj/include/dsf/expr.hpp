#pragma once

#include "dsf/graph.hpp"

#include <string>
#include <string_view>

namespace dsf {

/// Parses a named-graph expression.
///
///   expr  := term ('+' term)*                 disjoint union
///   term  := [INT ['*']] atom                 m copies
///   atom  := 'K' INT [',' INT] | 'P' INT | 'C' INT
///          | 'paw' | '4pan' | 'co4pan' | 'house'
///          | 'co(' expr ')' | 'join(' expr ',' expr ')' | '(' expr ')'
///
/// Examples: "K5", "K2,3", "3*K2", "P3+K1", "co(P5)", "join(2K1,P4)".
Graph parse_expression(std::string_view text);

/// Accepts a named expression first and falls back to graph6.
Graph parse_graph_argument(std::string_view text);

/// Short human-readable name for well-known small graphs, graph6 otherwise.
std::string describe(const Graph& g);

}  // namespace dsf
