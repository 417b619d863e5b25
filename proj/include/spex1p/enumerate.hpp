#pragma once

#include <vector>

#include "spex1p/graph.hpp"

namespace spex1p {

// One representative per isomorphism class of simple graphs on n vertices,
// generated by extending (n-1)-vertex classes with every neighborhood of a
// new top vertex and rejecting duplicates by canonical form. Deterministic
// order. Practical to n = 9.
std::vector<Graph> all_graphs_up_to_iso(int n);

}  // namespace spex1p
