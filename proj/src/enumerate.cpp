#include "spex1p/enumerate.hpp"

#include <stdexcept>
#include <unordered_set>

#include "spex1p/canonical.hpp"

namespace spex1p {

std::vector<Graph> all_graphs_up_to_iso(int n) {
  if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
  std::vector<Graph> level = {Graph::empty_graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& parent : level) {
      std::vector<Edge> base = parent.edges();
      for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<Edge> es = base;
        for (int v = 0; v < k - 1; ++v)
          if (mask >> v & 1u) es.emplace_back(v, k - 1);
        Graph child = Graph::from_edge_list(k, es);
        if (seen.insert(canonical_form(child)).second) next.push_back(child);
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace spex1p
