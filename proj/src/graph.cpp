#include "spex1p/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace spex1p {

namespace {

std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.adj_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  g.degrees_.assign(n, 0);
  std::vector<Edge> es;
  es.reserve(pairs.size());
  for (const Edge& p : pairs) {
    if (p.first == p.second)
      throw std::invalid_argument("loop rejected: " + edge_str(p));
    if (p.first < 0 || p.second < 0 || p.first >= n || p.second >= n)
      throw std::invalid_argument("endpoint out of range for n=" + std::to_string(n) +
                                  ": " + edge_str(p));
    es.push_back(make_edge(p.first, p.second));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  g.edges_ = std::move(es);
  for (const auto& [u, v] : g.edges_) {
    g.adj_[static_cast<std::size_t>(u) * g.words_ + v / 64] |= 1ull << (v % 64);
    g.adj_[static_cast<std::size_t>(v) * g.words_ + u / 64] |= 1ull << (u % 64);
    ++g.degrees_[u];
    ++g.degrees_[v];
  }
  return g;
}

Graph Graph::empty_graph(int n) { return from_edge_list(n, {}); }

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return from_edge_list(n, es);
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
  return from_edge_list(n, es);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) es.push_back(make_edge(u, (u + 1) % n));
  return from_edge_list(n, es);
}

Graph Graph::complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return from_edge_list(a + b, es);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return (adj_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1ull;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(degrees_[v]);
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

Graph Graph::with_edges(std::span<const Edge> added, std::span<const Edge> removed) const {
  std::vector<Edge> es = edges_;
  for (const Edge& e : removed) {
    Edge key = make_edge(e.first, e.second);
    auto it = std::find(es.begin(), es.end(), key);
    if (it == es.end())
      throw std::invalid_argument("cannot remove absent edge " + edge_str(key));
    es.erase(it);
  }
  for (const Edge& e : added) {
    Edge key = make_edge(e.first, e.second);
    if (std::find(es.begin(), es.end(), key) != es.end())
      throw std::invalid_argument("cannot add existing edge " + edge_str(key));
    es.push_back(key);
  }
  return from_edge_list(n_, es);
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
  if (static_cast<int>(new_label.size()) != n_)
    throw std::invalid_argument("relabeling size mismatch");
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const auto& [u, v] : edges_) es.push_back(make_edge(new_label[u], new_label[v]));
  return from_edge_list(n_, es);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<Edge> es = g1.edges();
  for (const auto& [u, v] : g2.edges()) es.emplace_back(u + n1, v + n1);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) es.emplace_back(u, n1 + v);
  return Graph::from_edge_list(n1 + n2, es);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  auto id = [n2](int u, int v) { return u * n2 + v; };
  std::vector<Edge> es;
  for (int u = 0; u < n1; ++u)
    for (const auto& [v, vp] : g2.edges()) es.push_back(make_edge(id(u, v), id(u, vp)));
  for (int v = 0; v < n2; ++v)
    for (const auto& [u, up] : g1.edges()) es.push_back(make_edge(id(u, v), id(up, v)));
  return Graph::from_edge_list(n1 * n2, es);
}

Graph split_vertex(const Graph& g, const VertexSplitSpec& spec) {
  const int n = g.vertex_count();
  const int t = spec.target;
  if (t < 0 || t >= n) throw std::invalid_argument("split target out of range");

  auto endpoint = [&](const Edge& e) -> int {
    Edge key = make_edge(e.first, e.second);
    if (!g.has_edge(key.first, key.second))
      throw std::invalid_argument("split spec references absent edge");
    if (key.first != t && key.second != t)
      throw std::invalid_argument("split spec edge not incident to target");
    return key.first == t ? key.second : key.first;
  };

  std::vector<int> a, b, s;
  for (const Edge& e : spec.part_a) a.push_back(endpoint(e));
  for (const Edge& e : spec.part_b) b.push_back(endpoint(e));
  for (const Edge& e : spec.shared) s.push_back(endpoint(e));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::sort(s.begin(), s.end());

  std::vector<int> all;
  all.insert(all.end(), a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("split spec parts are not disjoint");
  std::vector<int> incident = g.neighbors(t);
  if (all != incident)
    throw std::invalid_argument("split spec does not partition the incident edges");

  std::vector<Edge> es;
  for (const auto& [u, v] : g.edges())
    if (u != t && v != t) es.emplace_back(u, v);
  const int v2 = n;  // second replacement vertex
  for (int w : a) es.push_back(make_edge(t, w));
  for (int w : s) es.push_back(make_edge(t, w));
  for (int w : b) es.push_back(make_edge(v2, w));
  for (int w : s) es.push_back(make_edge(v2, w));
  return Graph::from_edge_list(n + 1, es);
}

namespace {

// Max clique by branch and bound over bitset candidate sets.
struct CliqueSearch {
  const Graph& g;
  int words;
  int best = 0;

  explicit CliqueSearch(const Graph& graph) : g(graph), words(graph.row_words()) {}

  static int popcount(const std::uint64_t* p, int words) {
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(p[i]);
    return c;
  }

  void expand(std::vector<std::uint64_t>& cand, int size) {
    if (size > best) best = size;
    for (int w = words - 1; w >= 0; --w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        if (size + popcount(cand.data(), words) <= best) return;
        int b = 63 - std::countl_zero(bits);
        bits &= ~(1ull << b);
        cand[w] &= ~(1ull << b);
        int v = w * 64 + b;
        std::vector<std::uint64_t> next(words);
        const std::uint64_t* rv = g.row(v);
        for (int i = 0; i < words; ++i) next[i] = cand[i] & rv[i];
        if (size + 1 + popcount(next.data(), words) > best) expand(next, size + 1);
      }
    }
  }
};

}  // namespace

int max_clique_size(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  CliqueSearch search(g);
  search.best = 1;
  std::vector<std::uint64_t> all(g.row_words(), 0);
  for (int v = 0; v < n; ++v) all[v / 64] |= 1ull << (v % 64);
  search.expand(all, 0);
  return search.best;
}

bool is_kt_free(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("is_kt_free requires t >= 2");
  return max_clique_size(g) < t;
}

int triangle_count(const Graph& g) {
  const int words = g.row_words();
  int count = 0;
  for (const auto& [u, v] : g.edges()) {
    const std::uint64_t* ru = g.row(u);
    const std::uint64_t* rv = g.row(v);
    for (int w = 0; w < words; ++w) {
      std::uint64_t common = ru[w] & rv[w];
      if (w == v / 64) common &= ~(1ull << (v % 64));  // count each triangle at its lowest edge
      count += std::popcount(common);
    }
  }
  return count / 3;
}

bool contains_k37(const Graph& g) {
  const int n = g.vertex_count();
  const int words = g.row_words();
  std::vector<int> high;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 7) high.push_back(v);
  if (static_cast<int>(high.size()) < 3) return false;
  std::vector<std::uint64_t> common(words);
  for (std::size_t i = 0; i < high.size(); ++i) {
    for (std::size_t j = i + 1; j < high.size(); ++j) {
      const std::uint64_t* ri = g.row(high[i]);
      const std::uint64_t* rj = g.row(high[j]);
      int cnt2 = 0;
      for (int w = 0; w < words; ++w) cnt2 += std::popcount(ri[w] & rj[w]);
      if (cnt2 < 7) continue;
      for (std::size_t k = j + 1; k < high.size(); ++k) {
        const std::uint64_t* rk = g.row(high[k]);
        int cnt = 0;
        for (int w = 0; w < words; ++w) {
          common[w] = ri[w] & rj[w] & rk[w];
          cnt += std::popcount(common[w]);
        }
        // the three centers cannot serve as leaves
        for (int v : {high[i], high[j], high[k]})
          if ((common[v / 64] >> (v % 64)) & 1ull) --cnt;
        if (cnt >= 7) return true;
      }
    }
  }
  return false;
}

DegeneracyResult degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  DegeneracyResult result;
  std::vector<int> deg = g.degrees();
  std::vector<bool> removed(n, false);
  result.elimination_order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    result.degeneracy = std::max(result.degeneracy, deg[best]);
    removed[best] = true;
    result.elimination_order.push_back(best);
    for (int w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  return result;
}

std::vector<int> component_labels(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](int c) { return c == 0; });
}

}  // namespace spex1p
