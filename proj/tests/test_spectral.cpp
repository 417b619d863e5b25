#include <doctest.h>

#include <cmath>
#include <random>

#include "spex1p/constructions.hpp"
#include "spex1p/enumerate.hpp"
#include "spex1p/spectral.hpp"
#include "support/oracles.hpp"

using namespace spex1p;

namespace {
// dense-oracle value frozen before the build (8x8 adjacency matrix)
constexpr double kLambdaP8SquarePlus = 3.588015099730594;
}  // namespace

TEST_CASE("known spectra") {
  CHECK(spectral_radius(Graph::complete(2)).lambda == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(spectral_radius(Graph::cycle(4)).lambda == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spectral_radius(Graph::empty_graph(3)).lambda == doctest::Approx(0.0));
  for (int n : {6, 20, 100}) {
    SpectralResult r = spectral_radius(Graph::complete_bipartite(2, n - 2));
    CHECK(std::abs(r.lambda - std::sqrt(2.0 * n - 4.0)) < 1e-9);
    CHECK(r.residual <= 1e-10);
  }
  SpectralResult p8 = spectral_radius(path_square_plus(8));
  CHECK(std::abs(p8.lambda - kLambdaP8SquarePlus) < 1e-9);
}

TEST_CASE("perron vector properties") {
  Graph g = join(Graph::empty_graph(2), cycle_square(10));
  SpectralResult r = spectral_radius(g);
  double mx = 0.0;
  for (double x : r.perron) {
    CHECK(x > 0.0);
    mx = std::max(mx, x);
  }
  CHECK(mx == doctest::Approx(1.0));
  CHECK(rayleigh_quotient(g, r.perron) == doctest::Approx(r.lambda).epsilon(1e-9));
}

TEST_CASE("disconnected graphs take the max over components") {
  // path P3 plus isolated vertices plus a C4 (the C4 wins)
  std::vector<Edge> es = {{0, 1}, {1, 2}, {4, 5}, {5, 6}, {6, 7}, {4, 7}};
  Graph g = Graph::from_edge_list(9, es);
  SpectralResult r = spectral_radius(g);
  CHECK(r.lambda == doctest::Approx(2.0).epsilon(1e-9));
  // perron vector supported on the winning component only
  for (int v : {0, 1, 2, 3, 8}) CHECK(r.perron[v] == 0.0);
  for (int v : {4, 5, 6, 7}) CHECK(r.perron[v] > 0.0);
  // tie between equal components goes to the lowest labels
  Graph two_triangles =
      Graph::from_edge_list(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2},
                                                 {3, 4}, {4, 5}, {3, 5}});
  SpectralResult t = spectral_radius(two_triangles);
  CHECK(t.perron[0] > 0.0);
  CHECK(t.perron[3] == 0.0);
}

TEST_CASE("rayleigh quotient") {
  Graph c6 = Graph::cycle(6);
  std::vector<double> ones(6, 1.0);
  CHECK(rayleigh_quotient(c6, ones) == doctest::Approx(2.0));  // 2-regular
  std::vector<double> indicator = {1, 0};
  CHECK(rayleigh_quotient(Graph::complete(2), indicator) == doctest::Approx(0.0));
  std::vector<double> zeros(6, 0.0);
  CHECK_THROWS_AS((void)rayleigh_quotient(c6, zeros), std::invalid_argument);
}

TEST_CASE("rayleigh_delta matches a from-scratch recomputation") {
  std::mt19937 rng(321);
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = oracle::random_graph(8, 0.5, rng);
    std::vector<double> x(8);
    for (double& e : x) e = unif(rng);
    // pick one absent and one present edge
    std::vector<Edge> absent, present = g.edges();
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (!g.has_edge(u, v)) absent.emplace_back(u, v);
    if (absent.empty() || present.empty()) continue;
    Edge add = absent[rep % absent.size()];
    Edge rem = present[rep % present.size()];
    RayleighDelta d = rayleigh_delta(g, x, std::vector<Edge>{add}, std::vector<Edge>{rem});
    Graph g2 = g.with_edges(std::vector<Edge>{add}, std::vector<Edge>{rem});
    double qx = 0, qx2 = 0, norm = 0;
    for (double e : x) norm += e * e;
    for (const auto& [u, v] : g.edges()) qx += 2 * x[u] * x[v];
    for (const auto& [u, v] : g2.edges()) qx2 += 2 * x[u] * x[v];
    CHECK(d.delta == doctest::Approx(qx2 - qx).epsilon(1e-12));
    (void)norm;
  }
  Graph k2 = Graph::complete(2);
  std::vector<double> x = {0.5, 0.25};
  RayleighDelta d = rayleigh_delta(k2, x, {}, std::vector<Edge>{{0, 1}});
  CHECK(d.delta == doctest::Approx(-2 * 0.5 * 0.25));
  CHECK(rayleigh_delta(k2, x, {}, {}).delta == 0.0);
  CHECK_THROWS_AS(rayleigh_delta(k2, x, std::vector<Edge>{{0, 1}}, {}),
                  std::invalid_argument);
}

TEST_CASE("positive perron delta implies larger spectral radius") {
  std::mt19937 rng(555);
  int exercised = 0;
  while (exercised < 15) {
    Graph g = oracle::random_graph(9, 0.4, rng);
    if (!is_connected(g)) continue;
    std::vector<Edge> absent;
    for (int u = 0; u < 9; ++u)
      for (int v = u + 1; v < 9; ++v)
        if (!g.has_edge(u, v)) absent.emplace_back(u, v);
    if (absent.empty()) continue;
    SpectralResult r = spectral_radius(g);
    Edge add = absent[exercised % absent.size()];
    RayleighDelta d = rayleigh_delta(g, r.perron, std::vector<Edge>{add}, {});
    Graph g2 = g.with_edges(std::vector<Edge>{add}, {});
    double l2 = spectral_radius(g2).lambda;
    if (d.delta > 2e-10) CHECK(l2 > r.lambda);
    // strict monotonicity under edge addition on connected graphs
    CHECK(l2 > r.lambda + 1e-10);
    ++exercised;
  }
}

TEST_CASE("agreement with the characteristic-polynomial oracle") {
  std::mt19937 rng(2024);
  for (int rep = 0; rep < 40; ++rep) {
    Graph g = oracle::random_graph(2 + rep % 7, 0.5, rng);
    double mine = spectral_radius(g).lambda;
    double ref = oracle::lambda_by_bisection(g);
    CHECK(std::abs(mine - ref) < 1e-9);
  }
}

TEST_CASE("perron bounds audit") {
  Graph good = join(Graph::empty_graph(2), cycle_ladder(48));
  // apexes carry the *lowest* labels under plain join; use the spanning pair
  PerronBoundsReport rep = perron_bounds_audit(good, {0, 1});
  CHECK(rep.lambda > 7.0);
  CHECK(rep.lower_holds);
  CHECK(rep.upper_holds);
  CHECK(rep.apexes_are_largest);
  CHECK(rep.holds());

  // K_{2,48}: lower bound is tight
  Graph k2m = Graph::complete_bipartite(2, 48);
  PerronBoundsReport tight = perron_bounds_audit(k2m, {0, 1});
  CHECK(tight.min_entry == doctest::Approx(tight.lower_bound).epsilon(1e-8));
  CHECK(tight.holds());

  Graph k2qp = spex_candidate(5, 50, 1).graph;  // K2 + QP_48, apexes on top
  PerronBoundsReport qp = perron_bounds_audit(k2qp, {48, 49});
  CHECK(qp.holds());

  CHECK_THROWS_AS(perron_bounds_audit(Graph::cycle(6), {0, 1}), std::invalid_argument);
}

TEST_CASE("compare_candidates tolerance band") {
  Graph a = Graph::complete_bipartite(2, 6);
  ComparisonResult same = compare_candidates(a, a, 1e-10);
  CHECK(same.ordering == Ordering::indistinguishable);
  ComparisonResult c4p4 = compare_candidates(Graph::cycle(4), Graph::path(4), 1e-10);
  CHECK(c4p4.ordering == Ordering::first_larger);
}
