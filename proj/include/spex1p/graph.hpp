#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spex1p {

using Edge = std::pair<int, int>;

constexpr Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable labeled simple graph on vertices 0..n-1. Adjacency is held both as
// a sorted edge list and as per-vertex bitset rows; the rows make pairwise
// adjacency tests and neighborhood intersections cheap in the clique and
// K_{3,7} searches.
class Graph {
public:
  Graph() = default;

  // Validates endpoints (throws std::invalid_argument naming the offending
  // pair) and deduplicates; loops are rejected.
  static Graph from_edge_list(int n, std::span<const Edge> pairs);

  static Graph empty_graph(int n);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete_bipartite(int a, int b);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::vector<int> neighbors(int v) const;

  int row_words() const { return words_; }
  const std::uint64_t* row(int v) const {
    return adj_.data() + static_cast<std::size_t>(v) * words_;
  }

  // Functional edits; `added` must be absent and `removed` present.
  Graph with_edges(std::span<const Edge> added, std::span<const Edge> removed) const;

  // Vertex v of the result carries the edges of vertex old with new_label[old] == v.
  Graph relabeled(const std::vector<int>& new_label) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> degrees_;
};

// Split specification for one vertex: the three parts must partition the
// target's incident edges. Both replacement vertices keep the shared edges.
struct VertexSplitSpec {
  int target = 0;
  std::vector<Edge> part_a;
  std::vector<Edge> part_b;
  std::vector<Edge> shared;
};

Graph join(const Graph& g1, const Graph& g2);
Graph cartesian_product(const Graph& g1, const Graph& g2);

// Target keeps its label and receives part_a + shared; the second replacement
// vertex gets label n and receives part_b + shared. The two are nonadjacent.
Graph split_vertex(const Graph& g, const VertexSplitSpec& spec);

int max_clique_size(const Graph& g);
bool is_kt_free(const Graph& g, int t);
int triangle_count(const Graph& g);

// True iff some 3-subset has at least 7 common neighbors outside itself.
bool contains_k37(const Graph& g);

struct DegeneracyResult {
  int degeneracy = 0;
  // Peeling order: each vertex has at most `degeneracy` neighbors later in it.
  std::vector<int> elimination_order;
};
DegeneracyResult degeneracy(const Graph& g);

bool is_connected(const Graph& g);
// Component id per vertex, ids assigned by lowest contained vertex label.
std::vector<int> component_labels(const Graph& g);

}  // namespace spex1p
