#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spex1p/graph.hpp"
#include "spex1p/one_planarity.hpp"

namespace spex1p {

// Squared path with closing edge: path v_0..v_{n-1}, edge {v_0, v_{n-1}},
// chords {v_i, v_{i+2}}. e = 2n - 2.
Graph path_square_plus(int n);

// C-box on n vertices: even n is C_{n/2} x K2; odd n splits one vertex of the
// even graph (both replacement vertices keep the rung).
Graph cycle_ladder(int n);

// P_n^{2+} minus the even-indexed path edges (even n only).
Graph qp_graph(int n);

// Squared cycle and the squared cycle minus the {v_{n-1}, v_1} chord.
Graph cycle_square(int n);
Graph cycle_square_minus(int n);

// All minimum edge-deletion subsets of P_n^{2+}, restricted to triangle
// edges, whose removal destroys every triangle. Exhaustive branch-and-bound
// over the triangle hypergraph; members returned as labeled graphs in
// deterministic order.
std::vector<Graph> enumerate_p2_family(int n);

// The deletion-set catalog of the two odd-case pattern schemas
// (chord-singleton and alternating path-edge), n odd.
std::vector<std::vector<Edge>> p2_pattern_deletions(int n);

// True iff g (a spanning subgraph of P_n^{2+}; anything else is rejected)
// arises from one of the pattern schemas. n must be odd.
bool p2_pattern_check(const Graph& g, int n);

struct SpexCandidate {
  Graph graph;
  DrawingCertificate certificate;
  std::string name;
};

// Theorem candidates on n vertices; inner family vertices are 0..n-3 and the
// two apexes take the top labels n-2, n-1.
//   t=3: K_{2,n-2}
//   t=4: 2K1 + C-box (n >= 10; below that the inner ladder has triangles)
//   t=5, even n: variant 0 = 2K1 + C^2, variant 1 = K2 + QP
//   t=5, odd n: variant 0 = 2K1 + C^{2-}, variant k = K2 + (k-th P^2 member)
//   t=6: K2 + P^{2+} (single variant)
SpexCandidate spex_candidate(int t, int n, std::optional<int> variant = {});
int spex_candidate_variant_count(int t, int n);

enum class Family {
  path_square_plus,
  cycle_ladder,
  qp,
  p2_member,
  cycle_square,
  cycle_square_minus,
  complete_bipartite2,
  spex_candidate,
};

struct FamilySpec {
  Family family = Family::path_square_plus;
  int n = 0;
  std::optional<int> variant;
  std::optional<int> t;  // spex_candidate only
};

struct FamilyBuildResult {
  Graph graph;
  std::optional<DrawingCertificate> certificate;
  std::string name;
};

FamilyBuildResult build_family(const FamilySpec& spec);

std::string family_to_string(Family f);
Family family_from_string(const std::string& s);

}  // namespace spex1p
