#include <doctest.h>

#include <functional>
#include <random>

#include "spex1p/constructions.hpp"
#include "spex1p/enumerate.hpp"
#include "spex1p/one_planarity.hpp"
#include "spex1p/planarity.hpp"
#include "support/oracles.hpp"

using namespace spex1p;

TEST_CASE("planarize arithmetic and validation") {
  Graph k4 = Graph::complete(4);
  DrawingCertificate cert =
      DrawingCertificate::from_pairs({{make_edge(0, 2), make_edge(1, 3)}});
  Graph p = planarize(k4, cert);
  CHECK(p.vertex_count() == 5);
  CHECK(p.edge_count() == k4.edge_count() + 2);
  CHECK(is_planar(p));
  CHECK(p.degree(4) == 4);

  CHECK(planarize(k4, DrawingCertificate{}) == k4);

  // shared endpoint rejected
  DrawingCertificate bad1 =
      DrawingCertificate::from_pairs({{make_edge(0, 1), make_edge(1, 2)}});
  CHECK_THROWS_AS(planarize(k4, bad1), std::invalid_argument);
  // reused edge rejected
  DrawingCertificate bad2 = DrawingCertificate::from_pairs(
      {{make_edge(0, 1), make_edge(2, 3)}, {make_edge(0, 1), make_edge(2, 3)}});
  CHECK_THROWS_AS(planarize(k4, bad2), std::invalid_argument);
  // absent edge rejected
  Graph c4 = Graph::cycle(4);
  DrawingCertificate bad3 =
      DrawingCertificate::from_pairs({{make_edge(0, 2), make_edge(1, 3)}});
  CHECK_THROWS_AS(planarize(c4, bad3), std::invalid_argument);
}

TEST_CASE("verify_certificate") {
  CHECK(verify_certificate(Graph::cycle(7), DrawingCertificate{}));
  CHECK(verify_certificate(
      Graph::complete(4),
      DrawingCertificate::from_pairs({{make_edge(0, 2), make_edge(1, 3)}})));
  // K5 needs a crossing; the empty certificate fails
  CHECK_FALSE(verify_certificate(Graph::complete(5), DrawingCertificate{}));
  // invalid pairs are false, not thrown
  CHECK_FALSE(verify_certificate(
      Graph::cycle(4),
      DrawingCertificate::from_pairs({{make_edge(0, 2), make_edge(1, 3)}})));
  // K7 can never verify
  Graph k7 = Graph::complete(7);
  CHECK_FALSE(verify_certificate(
      k7, DrawingCertificate::from_pairs({{make_edge(0, 1), make_edge(2, 3)}})));
}

TEST_CASE("spot verdicts") {
  OnePlanarVerdict k5 = is_one_planar(Graph::complete(5));
  CHECK(k5.status == OnePlanarStatus::yes);
  CHECK(verify_certificate(Graph::complete(5), *k5.certificate));

  OnePlanarVerdict k6 = is_one_planar(Graph::complete(6));
  CHECK(k6.status == OnePlanarStatus::yes);
  CHECK(k6.certificate->pairs.size() == 3);  // 15 edges need >= 3 dummies
  CHECK(verify_certificate(Graph::complete(6), *k6.certificate));

  OnePlanarVerdict k7 = is_one_planar(Graph::complete(7));
  CHECK(k7.status == OnePlanarStatus::no);
  CHECK(*k7.reason == OnePlanarReason::edge_bound);

  OnePlanarVerdict k37 = is_one_planar(Graph::complete_bipartite(3, 7));
  CHECK(k37.status == OnePlanarStatus::no);
  CHECK(*k37.reason == OnePlanarReason::k37);

  OnePlanarVerdict planar = is_one_planar(Graph::complete_bipartite(2, 30));
  CHECK(planar.status == OnePlanarStatus::yes);
  CHECK(planar.certificate->pairs.empty());
}

TEST_CASE("join(2K1, C^2_8) on 10 vertices is 1-planar") {
  Graph g = join(Graph::empty_graph(2), cycle_square(8));
  CHECK(g.edge_count() == 4 * 10 - 8);  // right at the edge bound
  OnePlanarVerdict v = is_one_planar(g);
  REQUIRE(v.status == OnePlanarStatus::yes);
  CHECK(verify_certificate(g, *v.certificate));
}

TEST_CASE("budget exhaustion is Unknown, never No") {
  OnePlanarVerdict v = is_one_planar(Graph::complete(6), 2);
  CHECK(v.status == OnePlanarStatus::unknown);
  CHECK(!v.reason.has_value());
}

TEST_CASE("yes verdicts restrict to spanning subgraphs") {
  std::mt19937 rng(616);
  Graph k6 = Graph::complete(6);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Edge> es;
    for (const Edge& e : k6.edges())
      if (rng() % 4 != 0) es.push_back(e);
    Graph sub = Graph::from_edge_list(6, es);
    CHECK(is_one_planar(sub).status == OnePlanarStatus::yes);
  }
}

namespace {

// Brute-force oracle: enumerate every set of pairwise edge- and
// endpoint-disjoint crossing pairs and planarity-test each planarization.
bool one_planar_by_matchings(const Graph& g) {
  if (is_planar(g)) return true;
  const std::vector<Edge>& edges = g.edges();
  std::vector<std::pair<Edge, Edge>> pairs;
  std::function<bool(std::size_t, std::vector<char>&)> rec =
      [&](std::size_t idx, std::vector<char>& used) -> bool {
    if (!pairs.empty() &&
        is_planar(planarize(g, DrawingCertificate::from_pairs(pairs))))
      return true;
    for (std::size_t i = idx; i < edges.size(); ++i) {
      if (used[i]) continue;
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (used[j]) continue;
        const Edge& a = edges[i];
        const Edge& b = edges[j];
        if (a.first == b.first || a.first == b.second || a.second == b.first ||
            a.second == b.second)
          continue;
        used[i] = used[j] = 1;
        pairs.emplace_back(a, b);
        if (rec(i + 1, used)) return true;
        pairs.pop_back();
        used[i] = used[j] = 0;
      }
    }
    return false;
  };
  std::vector<char> used(edges.size(), 0);
  return rec(0, used);
}

}  // namespace

TEST_CASE("verdicts agree with the exhaustive matching oracle at n = 6") {
  int yes = 0, no = 0;
  for (const Graph& g : all_graphs_up_to_iso(6)) {
    if (g.edge_count() > 11) continue;  // keep the oracle affordable
    OnePlanarVerdict v = is_one_planar(g);
    REQUIRE(v.status != OnePlanarStatus::unknown);
    bool expect = one_planar_by_matchings(g);
    CHECK((v.status == OnePlanarStatus::yes) == expect);
    (expect ? yes : no)++;
  }
  CHECK(yes > 100);  // the corpus exercises both outcomes... almost all yes
}

TEST_CASE("filters agree with verdicts on random small graphs") {
  std::mt19937 rng(909);
  for (int rep = 0; rep < 80; ++rep) {
    Graph g = oracle::random_graph(7, 0.5, rng);
    OnePlanarVerdict v = is_one_planar(g);
    REQUIRE(v.status != OnePlanarStatus::unknown);
    if (v.status == OnePlanarStatus::yes) {
      CHECK(verify_certificate(g, *v.certificate));
      CHECK(g.edge_count() <= 4 * g.vertex_count() - 8);
      CHECK(degeneracy(g).degeneracy <= 7);
      CHECK_FALSE(contains_k37(g));
    }
    if (is_planar(g)) CHECK(v.status == OnePlanarStatus::yes);
  }
}
