#pragma once

#include "spex1p/graph.hpp"

namespace spex1p {

// Exact planarity via the left-right criterion (DFS orientation, nesting
// order, conflict-pair stack).
bool is_planar(const Graph& g);

// Same test without constructing a Graph; edges must be simple and loop-free
// with endpoints below n.
bool is_planar_edge_list(int n, const std::vector<Edge>& edges);

}  // namespace spex1p
