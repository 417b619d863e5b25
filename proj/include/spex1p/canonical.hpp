#pragma once

#include <string>

#include "spex1p/graph.hpp"

namespace spex1p {

// Labeling-invariant byte string: equal forms iff isomorphic. Degree
// refinement plus individualization backtracking; intended for n <= 16
// (throws beyond).
std::string canonical_form(const Graph& g);

// The graph relabeled into its canonical labeling.
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace spex1p
