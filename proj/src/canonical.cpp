#include "spex1p/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace spex1p {

namespace {

constexpr int kMaxCanonical = 16;

using Partition = std::vector<std::vector<int>>;

// Equitable refinement: repeatedly split cells by neighbor counts into each
// cell, groups ordered by ascending count. Deterministic.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::vector<int> cnt(g.vertex_count(), 0);
      for (int v : cells[s])
        for (int w : g.neighbors(v)) ++cnt[w];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() <= 1) continue;
        auto& cell = cells[c];
        bool uniform = std::all_of(cell.begin(), cell.end(),
                                   [&](int v) { return cnt[v] == cnt[cell[0]]; });
        if (uniform) continue;
        std::stable_sort(cell.begin(), cell.end(),
                         [&](int a, int b) { return cnt[a] < cnt[b]; });
        Partition replacement;
        std::vector<int> group{cell[0]};
        for (std::size_t i = 1; i < cell.size(); ++i) {
          if (cnt[cell[i]] != cnt[group.back()]) {
            replacement.push_back(std::move(group));
            group.clear();
          }
          group.push_back(cell[i]);
        }
        replacement.push_back(std::move(group));
        cells.erase(cells.begin() + c);
        cells.insert(cells.begin() + c, replacement.begin(), replacement.end());
        changed = true;
        break;
      }
    }
  }
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::string best;        // packed upper-triangle bits of the best labeling
  std::vector<int> best_label;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

  std::string key_for(const std::vector<int>& order) const {
    // order[i] = original vertex placed at position i
    std::string key((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.has_edge(order[i], order[j]))
          key[bit / 8] |= static_cast<char>(1 << (7 - bit % 8));
    return key;
  }

  bool twins(int u, int v) const {
    // swapping u and v is an automorphism iff their rows agree off {u, v}
    const std::uint64_t* ru = g.row(u);
    const std::uint64_t* rv = g.row(v);
    for (int w = 0; w < g.row_words(); ++w) {
      std::uint64_t mask = ~0ull;
      if (u / 64 == w) mask &= ~(1ull << (u % 64));
      if (v / 64 == w) mask &= ~(1ull << (v % 64));
      if ((ru[w] & mask) != (rv[w] & mask)) return false;
    }
    return true;
  }

  void descend(Partition cells) {
    refine(g, cells);
    std::size_t branch = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        branch = c;
        break;
      }
    if (branch == cells.size()) {
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = cells[i][0];
      std::string key = key_for(order);
      if (!have_best || key < best) {
        best = std::move(key);
        best_label.assign(n, 0);
        for (int i = 0; i < n; ++i) best_label[order[i]] = i;
        have_best = true;
      }
      return;
    }
    const std::vector<int> cell = cells[branch];
    std::vector<int> tried;
    for (int v : cell) {
      if (std::any_of(tried.begin(), tried.end(),
                      [&](int u) { return twins(u, v); }))
        continue;
      tried.push_back(v);
      Partition next = cells;
      std::vector<int> rest;
      for (int w : cell)
        if (w != v) rest.push_back(w);
      next[branch] = {v};
      next.insert(next.begin() + branch + 1, std::move(rest));
      descend(std::move(next));
    }
  }
};

CanonSearch run_canon(const Graph& g) {
  if (g.vertex_count() > kMaxCanonical)
    throw std::invalid_argument("canonical_form supports n <= 16");
  CanonSearch search(g);
  if (g.vertex_count() == 0) {
    search.have_best = true;
    return search;
  }
  Partition unit(1);
  for (int v = 0; v < g.vertex_count(); ++v) unit[0].push_back(v);
  search.descend(std::move(unit));
  return search;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  CanonSearch search = run_canon(g);
  std::string out;
  out.push_back(static_cast<char>(g.vertex_count()));
  out += search.best;
  return out;
}

Graph canonical_graph(const Graph& g) {
  if (g.vertex_count() == 0) return g;
  CanonSearch search = run_canon(g);
  return g.relabeled(search.best_label);
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return false;
  std::vector<int> d1 = g1.degrees(), d2 = g2.degrees();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  return canonical_form(g1) == canonical_form(g2);
}

}  // namespace spex1p
