#include <doctest.h>

#include <algorithm>
#include <set>

#include "spex1p/canonical.hpp"
#include "spex1p/constructions.hpp"
#include "spex1p/one_planarity.hpp"
#include "spex1p/planarity.hpp"

using namespace spex1p;

TEST_CASE("path_square_plus census") {
  Graph p4 = path_square_plus(4);
  CHECK(p4 == Graph::complete(4));
  Graph p5 = path_square_plus(5);
  CHECK(p5.edge_count() == 8);
  std::vector<int> degs = p5.degrees();
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{3, 3, 3, 3, 4});
  for (int n = 4; n <= 50; ++n) CHECK(path_square_plus(n).edge_count() == 2 * n - 2);
  CHECK_THROWS_AS(path_square_plus(3), std::invalid_argument);
}

TEST_CASE("cycle_ladder census") {
  Graph even = cycle_ladder(12);
  CHECK(even.edge_count() == 18);
  CHECK(triangle_count(even) == 0);
  // girth 4: some 4-cycle exists through any rung
  CHECK(max_clique_size(even) == 2);

  Graph odd = cycle_ladder(13);
  CHECK(odd.vertex_count() == 13);
  CHECK(odd.edge_count() == 19);
  std::vector<int> d = odd.degrees();
  CHECK(std::count(d.begin(), d.end(), 2) == 2);
  CHECK(std::count(d.begin(), d.end(), 4) == 1);
  int a = -1, b = -1;
  for (int v = 0; v < 13; ++v)
    if (odd.degree(v) == 2) (a < 0 ? a : b) = v;
  CHECK_FALSE(odd.has_edge(a, b));

  for (int n = 8; n <= 40; ++n) {
    Graph g = cycle_ladder(n);
    int expected = n % 2 == 0 ? 3 * n / 2 : 3 * (n - 1) / 2 + 1;
    CHECK(g.edge_count() == expected);
    CHECK(triangle_count(g) == 0);  // triangle-free once the rings have length >= 4
  }
  // n = 6, 7 build on a 3-ring and do contain triangles
  CHECK(triangle_count(cycle_ladder(6)) == 2);
  CHECK(triangle_count(cycle_ladder(7)) == 1);
  CHECK_THROWS_AS(cycle_ladder(5), std::invalid_argument);
}

TEST_CASE("qp census") {
  CHECK(qp_graph(8).edge_count() == 11);
  CHECK(qp_graph(6).edge_count() == 8);
  for (int n = 6; n <= 40; n += 2) {
    Graph qp = qp_graph(n);
    CHECK(qp.edge_count() == (3 * n - 2) / 2);
    CHECK(triangle_count(qp) == 0);
    // spanning subgraph of the squared path
    Graph base = path_square_plus(n);
    for (const auto& [u, v] : qp.edges()) CHECK(base.has_edge(u, v));
  }
  CHECK_THROWS_AS(qp_graph(7), std::invalid_argument);
}

TEST_CASE("cycle_square census") {
  CHECK(cycle_square(5) == Graph::complete(5));
  Graph c8 = cycle_square(8);
  CHECK(c8.edge_count() == 16);
  for (int v = 0; v < 8; ++v) CHECK(c8.degree(v) == 4);
  Graph m8 = cycle_square_minus(8);
  CHECK(m8.edge_count() == 15);
  std::vector<int> d = m8.degrees();
  CHECK(std::count(d.begin(), d.end(), 3) == 2);
  CHECK(m8.degree(7) == 3);
  CHECK(m8.degree(1) == 3);
  for (int n = 5; n <= 40; ++n) {
    CHECK(cycle_square(n).edge_count() == 2 * n);
    CHECK(cycle_square_minus(n).edge_count() == 2 * n - 1);
  }
  CHECK_THROWS_AS(cycle_square(4), std::invalid_argument);
}

TEST_CASE("p2 family: even n has the unique QP member") {
  for (int n : {6, 8, 10, 12}) {
    auto members = enumerate_p2_family(n);
    REQUIRE(members.size() == 1);
    CHECK(members[0] == qp_graph(n));
    int deleted = path_square_plus(n).edge_count() - members[0].edge_count();
    CHECK(deleted == (n - 2 + 1) / 2);
  }
}

TEST_CASE("p2 family: odd n matches the pattern schemas exactly") {
  for (int n : {7, 9, 11}) {
    auto members = enumerate_p2_family(n);
    CHECK(static_cast<int>(members.size()) == n);  // derived count
    auto catalog = p2_pattern_deletions(n);
    CHECK(catalog.size() == members.size());
    int min_deletions = (n - 2 + 1) / 2;
    std::set<std::string> member_forms;
    for (const Graph& g : members) {
      CHECK(path_square_plus(n).edge_count() - g.edge_count() == min_deletions);
      CHECK(triangle_count(g) == 0);
      CHECK(g.vertex_count() == n);
      CHECK(p2_pattern_check(g, n));
      member_forms.insert(canonical_form(g));
    }
    // and the other direction: every schema set is a family member
    for (const auto& dels : catalog) {
      Graph g = path_square_plus(n).with_edges({}, dels);
      bool found = false;
      for (const Graph& m : members) found = found || m == g;
      CHECK(found);
    }
    (void)member_forms;
  }
}

TEST_CASE("p2 pattern check rejects near misses") {
  int n = 9;
  // a schema deletion plus one extra arbitrary deletion is no longer minimum
  Graph base = path_square_plus(n);
  std::vector<Edge> dels;
  for (int j = 1; j + 1 < n; j += 2) dels.push_back(make_edge(j, j + 1));
  dels.push_back(make_edge(0, 2));
  Graph wrong = base.with_edges({}, dels);
  CHECK_FALSE(p2_pattern_check(wrong, n));
  // the base itself still has triangles
  CHECK_FALSE(p2_pattern_check(base, n));
  // non-subgraph is rejected
  CHECK_THROWS_AS(p2_pattern_check(Graph::complete(n), n), std::invalid_argument);
  CHECK_THROWS_AS(p2_pattern_check(qp_graph(8), 8), std::invalid_argument);
}

TEST_CASE("spex candidates: graphs, freeness, certificates") {
  // t=3
  SpexCandidate k3c = spex_candidate(3, 20);
  CHECK(k3c.graph == Graph::from_edge_list(20, [] {
          std::vector<Edge> es;
          for (int v = 0; v < 18; ++v) {
            es.push_back(make_edge(v, 18));
            es.push_back(make_edge(v, 19));
          }
          return es;
        }()));
  CHECK(k3c.certificate.pairs.empty());
  CHECK(is_kt_free(k3c.graph, 3));
  CHECK(is_planar(k3c.graph));

  // t=4 even: isomorphic to join(2K1, cycle_ladder(n-2))
  SpexCandidate k4c = spex_candidate(4, 14);
  CHECK(is_kt_free(k4c.graph, 4));
  CHECK(verify_certificate(k4c.graph, k4c.certificate));
  Graph reference = join(Graph::empty_graph(2), cycle_ladder(12));
  CHECK(is_isomorphic(k4c.graph, reference));

  // t=5 even: both variants
  SpexCandidate c2 = spex_candidate(5, 14, 0);
  CHECK(is_kt_free(c2.graph, 5));
  CHECK(verify_certificate(c2.graph, c2.certificate));
  CHECK(is_isomorphic(c2.graph, join(Graph::empty_graph(2), cycle_square(12))));

  SpexCandidate qp = spex_candidate(5, 14, 1);
  CHECK(is_kt_free(qp.graph, 5));
  CHECK(verify_certificate(qp.graph, qp.certificate));
  CHECK(is_isomorphic(qp.graph, join(Graph::complete(2), qp_graph(12))));

  // t=5 odd: C^{2-} plus every P^2 member
  int variants = spex_candidate_variant_count(5, 13);
  CHECK(variants == 1 + 11);
  for (int v = 0; v < variants; ++v) {
    SpexCandidate cand = spex_candidate(5, 13, v);
    CHECK(is_kt_free(cand.graph, 5));
    CHECK(verify_certificate(cand.graph, cand.certificate));
  }

  // t=6 sanity candidate
  SpexCandidate t6 = spex_candidate(6, 13);
  CHECK(is_kt_free(t6.graph, 6));
  CHECK_FALSE(is_kt_free(t6.graph, 5));
  CHECK(verify_certificate(t6.graph, t6.certificate));

  CHECK_THROWS_AS(spex_candidate(7, 20), std::invalid_argument);
  CHECK_THROWS_AS(spex_candidate(5, 14, 2), std::invalid_argument);
  CHECK_THROWS_AS(spex_candidate(4, 8), std::invalid_argument);
}

TEST_CASE("candidate necessary conditions across sizes") {
  for (int n = 10; n <= 60; n += 10) {
    for (int t : {3, 4, 5}) {
      int variants = spex_candidate_variant_count(t, n);
      for (int v = 0; v < variants; ++v) {
        SpexCandidate cand = spex_candidate(t, n, v);
        CHECK(is_kt_free(cand.graph, t));
        CHECK(cand.graph.edge_count() <= 4 * n - 8);
        CHECK(degeneracy(cand.graph).degeneracy <= 7);
        CHECK_FALSE(contains_k37(cand.graph));
        CHECK(verify_certificate(cand.graph, cand.certificate));
      }
    }
  }
}

TEST_CASE("family spec dispatch") {
  FamilySpec spec;
  spec.family = Family::qp;
  spec.n = 8;
  CHECK(build_family(spec).graph == qp_graph(8));

  spec.family = Family::spex_candidate;
  spec.n = 14;
  spec.t = 4;
  FamilyBuildResult r = build_family(spec);
  CHECK(r.certificate.has_value());
  CHECK(verify_certificate(r.graph, *r.certificate));

  spec.family = Family::complete_bipartite2;
  spec.n = 10;
  spec.t.reset();
  CHECK(build_family(spec).graph.edge_count() == 16);

  for (Family f :
       {Family::path_square_plus, Family::cycle_ladder, Family::qp, Family::p2_member,
        Family::cycle_square, Family::cycle_square_minus, Family::complete_bipartite2,
        Family::spex_candidate})
    CHECK(family_from_string(family_to_string(f)) == f);
}
