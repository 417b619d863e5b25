#include "spex1p/one_planarity.hpp"

#include <algorithm>
#include <stdexcept>

#include "spex1p/planarity.hpp"

namespace spex1p {

namespace {

std::pair<Edge, Edge> normalize_pair(Edge a, Edge b) {
  a = make_edge(a.first, a.second);
  b = make_edge(b.first, b.second);
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// nullptr on success, otherwise a static reason string
const char* validate(const Graph& g, const DrawingCertificate& cert) {
  std::vector<Edge> used;
  for (const auto& [a, b] : cert.pairs) {
    if (!g.has_edge(a.first, a.second) || !g.has_edge(b.first, b.second))
      return "certificate references an edge not in the graph";
    if (a.first == b.first || a.first == b.second || a.second == b.first ||
        a.second == b.second)
      return "crossing pair shares an endpoint";
    used.push_back(make_edge(a.first, a.second));
    used.push_back(make_edge(b.first, b.second));
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end())
    return "edge crossed more than once";
  return nullptr;
}

}  // namespace

DrawingCertificate DrawingCertificate::from_pairs(std::vector<std::pair<Edge, Edge>> raw) {
  DrawingCertificate cert;
  cert.pairs.reserve(raw.size());
  for (const auto& [a, b] : raw) cert.pairs.push_back(normalize_pair(a, b));
  std::sort(cert.pairs.begin(), cert.pairs.end());
  return cert;
}

Graph planarize(const Graph& g, const DrawingCertificate& cert) {
  if (const char* err = validate(g, cert)) throw std::invalid_argument(err);
  std::vector<Edge> es = g.edges();
  auto drop = [&](const Edge& e) {
    es.erase(std::find(es.begin(), es.end(), make_edge(e.first, e.second)));
  };
  int next = g.vertex_count();
  for (const auto& [a, b] : cert.pairs) {
    drop(a);
    drop(b);
    es.push_back(make_edge(next, a.first));
    es.push_back(make_edge(next, a.second));
    es.push_back(make_edge(next, b.first));
    es.push_back(make_edge(next, b.second));
    ++next;
  }
  return Graph::from_edge_list(next, es);
}

bool verify_certificate(const Graph& g, const DrawingCertificate& cert) {
  if (validate(g, cert) != nullptr) return false;
  return is_planar(planarize(g, cert));
}

namespace {

struct BudgetExhausted {};

// Branch-and-prune search for a crossing matching whose planarization is
// planar. Branching is conflict-driven: a minimal non-planar subgraph of the
// current planarization must lose one of its still-undecided edges to a
// crossing, so only those edges are branched on. An obstruction that uses no
// undecided edge survives every extension, which prunes the subtree.
struct OnePlanarSearch {
  const Graph& g;
  int n;
  std::uint64_t budget;
  std::uint64_t expansions = 0;

  OnePlanarSearch(const Graph& graph, std::uint64_t node_budget)
      : g(graph), n(graph.vertex_count()), budget(node_budget) {}

  // Planarity of the planarization formed by the kept edges plus one dummy
  // star per crossing pair.
  static bool planar_with(int n, const std::vector<Edge>& kept,
                          const std::vector<std::pair<Edge, Edge>>& pairs) {
    std::vector<Edge> es = kept;
    int next = n;
    for (const auto& [a, b] : pairs) {
      es.push_back(make_edge(next, a.first));
      es.push_back(make_edge(next, a.second));
      es.push_back(make_edge(next, b.first));
      es.push_back(make_edge(next, b.second));
      ++next;
    }
    return is_planar_edge_list(next, es);
  }

  // Greedily deletes original kept edges while the graph stays non-planar;
  // the kept edges that remain form an inclusion-minimal obstruction core.
  std::vector<Edge> obstruction_kept_edges(const std::vector<Edge>& kept,
                                           const std::vector<std::pair<Edge, Edge>>& pairs) {
    std::vector<Edge> core = kept;
    for (std::size_t i = 0; i < core.size();) {
      std::vector<Edge> trial = core;
      trial.erase(trial.begin() + i);
      if (!planar_with(n, trial, pairs))
        core = std::move(trial);
      else
        ++i;
    }
    return core;
  }

  std::optional<std::vector<std::pair<Edge, Edge>>> search(
      std::vector<std::pair<Edge, Edge>> pairs, std::vector<Edge> undecided,
      std::vector<Edge> kept_fixed) {
    if (++expansions > budget) throw BudgetExhausted{};

    std::vector<Edge> kept = kept_fixed;
    kept.insert(kept.end(), undecided.begin(), undecided.end());
    if (planar_with(n, kept, pairs)) return pairs;

    // Euler bound on any completed planarization of this branch
    const long long e_now = static_cast<long long>(kept.size()) + 2 * pairs.size();
    const long long n_now = n + static_cast<long long>(pairs.size());
    const long long deficit = e_now - (3 * n_now - 6);
    if (deficit > static_cast<long long>(undecided.size()) / 2) return std::nullopt;

    std::vector<Edge> core = obstruction_kept_edges(kept, pairs);
    std::vector<Edge> branchable;
    for (const Edge& e : core)
      if (std::find(undecided.begin(), undecided.end(), e) != undecided.end())
        branchable.push_back(e);
    if (branchable.empty()) return std::nullopt;  // obstruction is permanent

    for (std::size_t i = 0; i < branchable.size(); ++i) {
      const Edge s = branchable[i];
      // s is the first obstruction edge that crosses; earlier ones stay uncrossed
      std::vector<Edge> fixed = kept_fixed;
      fixed.insert(fixed.end(), branchable.begin(), branchable.begin() + i);
      std::vector<Edge> rest;
      for (const Edge& e : undecided)
        if (e != s &&
            std::find(branchable.begin(), branchable.begin() + i, e) ==
                branchable.begin() + i)
          rest.push_back(e);
      for (std::size_t j = 0; j < rest.size(); ++j) {
        const Edge f = rest[j];
        if (f.first == s.first || f.first == s.second || f.second == s.first ||
            f.second == s.second)
          continue;
        std::vector<std::pair<Edge, Edge>> next_pairs = pairs;
        next_pairs.push_back(normalize_pair(s, f));
        std::vector<Edge> next_undecided;
        for (const Edge& e : rest)
          if (e != f) next_undecided.push_back(e);
        auto r = search(std::move(next_pairs), std::move(next_undecided), fixed);
        if (r) return r;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

OnePlanarVerdict is_one_planar(const Graph& g, std::uint64_t budget) {
  OnePlanarVerdict verdict;
  const int n = g.vertex_count();
  const int e = g.edge_count();

  if (is_planar(g)) {
    verdict.status = OnePlanarStatus::yes;
    verdict.certificate = DrawingCertificate{};
    return verdict;
  }
  // the 4n-8 bound applies from n >= 3; smaller graphs are planar anyway
  if (e > 4 * n - 8) {
    verdict.status = OnePlanarStatus::no;
    verdict.reason = OnePlanarReason::edge_bound;
    return verdict;
  }
  if (degeneracy(g).degeneracy > 7) {
    verdict.status = OnePlanarStatus::no;
    verdict.reason = OnePlanarReason::edge_bound;
    return verdict;
  }
  if (contains_k37(g)) {
    verdict.status = OnePlanarStatus::no;
    verdict.reason = OnePlanarReason::k37;
    return verdict;
  }

  std::vector<Edge> undecided = g.edges();
  std::stable_sort(undecided.begin(), undecided.end(), [&](const Edge& a, const Edge& b) {
    return g.degree(a.first) + g.degree(a.second) >
           g.degree(b.first) + g.degree(b.second);
  });

  OnePlanarSearch search(g, budget);
  try {
    auto found = search.search({}, std::move(undecided), {});
    verdict.expansions = search.expansions;
    if (found) {
      verdict.status = OnePlanarStatus::yes;
      verdict.certificate = DrawingCertificate::from_pairs(std::move(*found));
    } else {
      verdict.status = OnePlanarStatus::no;
      verdict.reason = OnePlanarReason::search_exhausted;
    }
  } catch (const BudgetExhausted&) {
    verdict.expansions = search.expansions;
    verdict.status = OnePlanarStatus::unknown;
  }
  return verdict;
}

}  // namespace spex1p
