#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spex1p/graph.hpp"

namespace spex1p {

// A set of edge-disjoint crossing pairs witnessing 1-planarity: replacing
// each pair by a degree-4 dummy vertex must leave a planar graph.
struct DrawingCertificate {
  std::vector<std::pair<Edge, Edge>> pairs;

  static DrawingCertificate from_pairs(std::vector<std::pair<Edge, Edge>> raw);
  bool operator==(const DrawingCertificate&) const = default;
};

// Crossing-to-dummy-vertex reduction; dummy vertices take labels n, n+1, ...
// in certificate order. Throws std::invalid_argument for missing edges,
// reused edges, or pairs sharing an endpoint.
Graph planarize(const Graph& g, const DrawingCertificate& cert);

// True iff the pairs are valid for g and the planarization is planar.
bool verify_certificate(const Graph& g, const DrawingCertificate& cert);

enum class OnePlanarStatus { yes, no, unknown };
enum class OnePlanarReason { edge_bound, k37, search_exhausted };

struct OnePlanarVerdict {
  OnePlanarStatus status = OnePlanarStatus::unknown;
  std::optional<OnePlanarReason> reason;           // set iff status == no
  std::optional<DrawingCertificate> certificate;   // set iff status == yes
  std::uint64_t expansions = 0;
};

// Exact decision when the branch-and-prune search finishes within the node
// budget; Unknown only on budget exhaustion. Degeneracy > 7 is reported as
// an edge-bound violation (the residual subgraph of the peeling already
// exceeds 4n' - 8 edges).
OnePlanarVerdict is_one_planar(const Graph& g, std::uint64_t budget = 10'000'000);

}  // namespace spex1p
