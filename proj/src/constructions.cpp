#include "spex1p/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace spex1p {

namespace {

Edge cyc(int j, int m) { return make_edge(j % m, (j + 1) % m); }
Edge chord(int j, int m) { return make_edge(j % m, (j + 2) % m); }

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Graph path_square_plus(int n) {
  require(n >= 4, "path_square_plus requires n >= 4");
  std::vector<Edge> es;
  for (int j = 0; j + 1 < n; ++j) es.emplace_back(j, j + 1);
  es.push_back(make_edge(0, n - 1));
  for (int j = 0; j + 2 < n; ++j) es.emplace_back(j, j + 2);
  return Graph::from_edge_list(n, es);
}

Graph cycle_ladder(int n) {
  require(n >= 6, "cycle_ladder requires n >= 6");
  if (n % 2 == 0) return cartesian_product(Graph::cycle(n / 2), Graph::complete(2));
  Graph even = cycle_ladder(n - 1);
  // split vertex 0 = (0, 0): one ring edge each side, the rung is shared
  VertexSplitSpec spec;
  spec.target = 0;
  spec.part_a = {make_edge(0, 2)};
  spec.part_b = {make_edge(0, n - 3)};
  spec.shared = {make_edge(0, 1)};
  return split_vertex(even, spec);
}

Graph qp_graph(int n) {
  require(n >= 6 && n % 2 == 0, "qp_graph requires even n >= 6");
  Graph base = path_square_plus(n);
  std::vector<Edge> removed;
  for (int j = 1; j + 1 < n; j += 2) removed.push_back(make_edge(j, j + 1));
  return base.with_edges({}, removed);
}

Graph cycle_square(int n) {
  require(n >= 5, "cycle_square requires n >= 5");
  std::vector<Edge> es;
  for (int j = 0; j < n; ++j) es.push_back(cyc(j, n));
  for (int j = 0; j < n; ++j) es.push_back(chord(j, n));
  return Graph::from_edge_list(n, es);
}

Graph cycle_square_minus(int n) {
  require(n >= 5, "cycle_square_minus requires n >= 5");
  return cycle_square(n).with_edges({}, {{chord(n - 1, n)}});
}

std::vector<Graph> enumerate_p2_family(int n) {
  require(n >= 6, "enumerate_p2_family requires n >= 6");
  Graph base = path_square_plus(n);

  // all triangles of the base graph, each as its sorted edge triple
  std::vector<std::array<Edge, 3>> triangles;
  for (const auto& [u, v] : base.edges())
    for (int w = v + 1; w < n; ++w)
      if (base.has_edge(u, w) && base.has_edge(v, w))
        triangles.push_back({make_edge(u, v), make_edge(u, w), make_edge(v, w)});

  // an edge can hit at most `max_hits` triangles
  std::map<Edge, int> hits;
  for (const auto& t : triangles)
    for (const Edge& e : t) ++hits[e];
  int max_hits = 1;
  for (const auto& [e, h] : hits) max_hits = std::max(max_hits, h);

  std::set<std::vector<Edge>> solutions;
  int limit = 0;
  auto hit_by = [&](const std::array<Edge, 3>& t, const std::set<Edge>& dels) {
    return dels.count(t[0]) || dels.count(t[1]) || dels.count(t[2]);
  };
  std::function<void(std::set<Edge>&, std::size_t)> rec =
      [&](std::set<Edge>& dels, std::size_t from) {
        std::size_t first = from;
        while (first < triangles.size() && hit_by(triangles[first], dels)) ++first;
        if (first == triangles.size()) {
          std::vector<Edge> sol(dels.begin(), dels.end());
          solutions.insert(std::move(sol));
          return;
        }
        int budget = limit - static_cast<int>(dels.size());
        if (budget <= 0) return;
        long long unhit = 0;
        for (std::size_t i = first; i < triangles.size(); ++i)
          if (!hit_by(triangles[i], dels)) ++unhit;
        if (unhit > static_cast<long long>(max_hits) * budget) return;
        for (const Edge& e : triangles[first]) {
          if (dels.count(e)) continue;
          dels.insert(e);
          rec(dels, first + 1);
          dels.erase(e);
        }
      };

  for (limit = 0; limit <= base.edge_count(); ++limit) {
    std::set<Edge> dels;
    rec(dels, 0);
    if (!solutions.empty()) break;
  }

  std::vector<Graph> out;
  out.reserve(solutions.size());
  for (const auto& sol : solutions) out.push_back(base.with_edges({}, sol));
  return out;
}

std::vector<std::vector<Edge>> p2_pattern_deletions(int n) {
  require(n >= 7 && n % 2 == 1, "p2 pattern schemas are for odd n >= 7");
  const int m = n;
  auto c = [&](int one_based) { return make_edge(one_based - 1, one_based); };
  auto h = [&](int one_based) { return make_edge(one_based - 1, one_based + 1); };
  std::set<std::vector<Edge>> out;
  auto push = [&](std::set<Edge> s) {
    out.insert(std::vector<Edge>(s.begin(), s.end()));
  };
  // chord singleton at odd i, plus the forced matchings on both sides
  for (int i = 1; i <= m - 2; i += 2) {
    std::set<Edge> s{h(i)};
    for (int j = 2; j < i; j += 2) s.insert(c(j));
    for (int j = i + 2; j <= m - 2; j += 2) s.insert(c(j));
    push(std::move(s));
  }
  // end path-edge singletons e_1 and e_{m-1}
  {
    std::set<Edge> s{c(1)};
    for (int j = 3; j <= m - 2; j += 2) s.insert(c(j));
    push(std::move(s));
  }
  {
    std::set<Edge> s{c(m - 1)};
    for (int j = 2; j <= m - 3; j += 2) s.insert(c(j));
    push(std::move(s));
  }
  // consecutive pair at even i (double-hit triangle), matchings outside
  for (int i = 2; i <= m - 3; i += 2) {
    std::set<Edge> s{c(i), c(i + 1)};
    for (int j = 2; j <= i - 2; j += 2) s.insert(c(j));
    for (int j = i + 3; j <= m - 2; j += 2) s.insert(c(j));
    push(std::move(s));
  }
  return std::vector<std::vector<Edge>>(out.begin(), out.end());
}

bool p2_pattern_check(const Graph& g, int n) {
  require(n % 2 == 1, "p2_pattern_check requires odd n");
  Graph base = path_square_plus(n);
  require(g.vertex_count() == n, "graph is not a spanning subgraph of P_n^{2+}");
  for (const auto& [u, v] : g.edges())
    require(base.has_edge(u, v), "graph is not a spanning subgraph of P_n^{2+}");
  std::vector<Edge> deleted;
  for (const Edge& e : base.edges())
    if (!g.has_edge(e.first, e.second)) deleted.push_back(e);
  const auto catalog = p2_pattern_deletions(n);
  return std::find(catalog.begin(), catalog.end(), deleted) != catalog.end();
}

namespace {

// join with the inner family on labels 0..m-1 and apexes m, m+1
Graph apex_join(int m, std::vector<Edge> inner, bool adjacent_apexes) {
  for (int v = 0; v < m; ++v) {
    inner.push_back(make_edge(v, m));
    inner.push_back(make_edge(v, m + 1));
  }
  if (adjacent_apexes) inner.push_back(make_edge(m, m + 1));
  return Graph::from_edge_list(m + 2, inner);
}

// Chords of a cycle-type inner graph cross one apex spoke at their middle
// vertex, alternating apexes by parity so no spoke is crossed twice.
DrawingCertificate cycle_family_certificate(const Graph& g, int m) {
  std::vector<std::pair<Edge, Edge>> pairs;
  for (int j = 0; j < m; ++j) {
    Edge hj = chord(j, m);
    if (!g.has_edge(hj.first, hj.second)) continue;
    int apex = (j % 2 == 0) ? m : m + 1;
    pairs.emplace_back(hj, make_edge(apex, (j + 1) % m));
  }
  return DrawingCertificate::from_pairs(std::move(pairs));
}

// Path-type inner graph (P^{2+}-derived): non-wrapping chords cross spokes by
// parity; the closing edge crosses the apex edge when the apexes are joined.
DrawingCertificate path_family_certificate(const Graph& g, int m, bool has_xw) {
  std::vector<std::pair<Edge, Edge>> pairs;
  for (int j = 0; j + 2 < m; ++j) {
    Edge hj = make_edge(j, j + 2);
    if (!g.has_edge(hj.first, hj.second)) continue;
    int apex = (j % 2 == 0) ? m : m + 1;
    pairs.emplace_back(hj, make_edge(apex, j + 1));
  }
  if (has_xw && g.has_edge(0, m - 1))
    pairs.emplace_back(make_edge(0, m - 1), make_edge(m, m + 1));
  return DrawingCertificate::from_pairs(std::move(pairs));
}

// Circle-labeled C-box, even m: all chords plus the odd cycle edges.
std::vector<Edge> circle_ladder_edges(int m) {
  std::vector<Edge> es;
  for (int j = 0; j < m; ++j) es.push_back(chord(j, m));
  for (int j = 1; j < m; j += 2) es.push_back(cyc(j, m));
  return es;
}

}  // namespace

int spex_candidate_variant_count(int t, int n) {
  switch (t) {
    case 3:
      return n >= 4 ? 1 : 0;
    case 4:
      return (n >= 10 && n % 2 == 0) ? 1 : 0;
    case 5:
      if (n % 2 == 0) return n >= 8 ? 2 : 0;
      return n >= 9 ? 1 + static_cast<int>(p2_pattern_deletions(n - 2).size()) : 0;
    case 6:
      return n >= 7 ? 1 : 0;
    default:
      return 0;
  }
}

SpexCandidate spex_candidate(int t, int n, std::optional<int> variant) {
  const int v = variant.value_or(0);
  const int count = spex_candidate_variant_count(t, n);
  require(count > 0, "unsupported spex candidate (t, n)");
  require(v >= 0 && v < count, "unsupported spex candidate variant");
  const int m = n - 2;
  SpexCandidate out;
  if (t == 3) {
    out.graph = apex_join(m, {}, false);
    out.certificate = DrawingCertificate{};
    out.name = "K_{2," + std::to_string(m) + "}";
    return out;
  }
  if (t == 4) {
    out.graph = apex_join(m, circle_ladder_edges(m), false);
    out.certificate = cycle_family_certificate(out.graph, m);
    out.name = "2K1+Cbox_" + std::to_string(m);
    return out;
  }
  if (t == 5 && n % 2 == 0) {
    if (v == 0) {
      out.graph = apex_join(m, cycle_square(m).edges(), false);
      out.certificate = cycle_family_certificate(out.graph, m);
      out.name = "2K1+C2_" + std::to_string(m);
    } else {
      out.graph = apex_join(m, qp_graph(m).edges(), true);
      out.certificate = path_family_certificate(out.graph, m, true);
      out.name = "K2+QP_" + std::to_string(m);
    }
    return out;
  }
  if (t == 5) {  // odd n
    if (v == 0) {
      out.graph = apex_join(m, cycle_square_minus(m).edges(), false);
      out.certificate = cycle_family_certificate(out.graph, m);
      out.name = "2K1+C2minus_" + std::to_string(m);
    } else {
      const auto catalog = p2_pattern_deletions(m);
      Graph inner = path_square_plus(m).with_edges({}, catalog[v - 1]);
      out.graph = apex_join(m, inner.edges(), true);
      out.certificate = path_family_certificate(out.graph, m, true);
      out.name = "K2+P2[" + std::to_string(v - 1) + "]_" + std::to_string(m);
    }
    return out;
  }
  // t == 6
  out.graph = apex_join(m, path_square_plus(m).edges(), true);
  out.certificate = path_family_certificate(out.graph, m, true);
  out.name = "K2+Psq+_" + std::to_string(m);
  return out;
}

FamilyBuildResult build_family(const FamilySpec& spec) {
  FamilyBuildResult out;
  switch (spec.family) {
    case Family::path_square_plus:
      out.graph = path_square_plus(spec.n);
      out.name = "Psq+_" + std::to_string(spec.n);
      return out;
    case Family::cycle_ladder:
      out.graph = cycle_ladder(spec.n);
      out.name = "Cbox_" + std::to_string(spec.n);
      return out;
    case Family::qp:
      out.graph = qp_graph(spec.n);
      out.name = "QP_" + std::to_string(spec.n);
      return out;
    case Family::p2_member: {
      auto members = enumerate_p2_family(spec.n);
      int v = spec.variant.value_or(0);
      require(v >= 0 && v < static_cast<int>(members.size()),
              "p2 member index out of range");
      out.graph = members[v];
      out.name = "P2[" + std::to_string(v) + "]_" + std::to_string(spec.n);
      return out;
    }
    case Family::cycle_square:
      out.graph = cycle_square(spec.n);
      out.name = "C2_" + std::to_string(spec.n);
      return out;
    case Family::cycle_square_minus:
      out.graph = cycle_square_minus(spec.n);
      out.name = "C2minus_" + std::to_string(spec.n);
      return out;
    case Family::complete_bipartite2:
      require(spec.n >= 3, "complete_bipartite2 requires n >= 3");
      out.graph = apex_join(spec.n - 2, {}, false);
      out.certificate = DrawingCertificate{};
      out.name = "K_{2," + std::to_string(spec.n - 2) + "}";
      return out;
    case Family::spex_candidate: {
      require(spec.t.has_value(), "spex candidate requires t");
      SpexCandidate cand = spex_candidate(*spec.t, spec.n, spec.variant);
      out.graph = std::move(cand.graph);
      out.certificate = std::move(cand.certificate);
      out.name = std::move(cand.name);
      return out;
    }
  }
  throw std::invalid_argument("unknown family");
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::path_square_plus: return "path-square-plus";
    case Family::cycle_ladder: return "cycle-ladder";
    case Family::qp: return "qp";
    case Family::p2_member: return "p2";
    case Family::cycle_square: return "cycle-square";
    case Family::cycle_square_minus: return "cycle-square-minus";
    case Family::complete_bipartite2: return "k2n";
    case Family::spex_candidate: return "spex";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "path-square-plus" || s == "psq+") return Family::path_square_plus;
  if (s == "cycle-ladder" || s == "cbox") return Family::cycle_ladder;
  if (s == "qp") return Family::qp;
  if (s == "p2") return Family::p2_member;
  if (s == "cycle-square" || s == "c2") return Family::cycle_square;
  if (s == "cycle-square-minus" || s == "c2minus") return Family::cycle_square_minus;
  if (s == "k2n") return Family::complete_bipartite2;
  if (s == "spex") return Family::spex_candidate;
  throw std::invalid_argument("unknown family: " + s);
}

}  // namespace spex1p
