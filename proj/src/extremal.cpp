#include "spex1p/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <atomic>
#include <thread>

#include "spex1p/canonical.hpp"
#include "spex1p/constructions.hpp"
#include "spex1p/enumerate.hpp"
#include "spex1p/one_planarity.hpp"
#include "spex1p/spectral.hpp"

namespace spex1p {

SpexReport spex_bruteforce(int n, int t, double tol, std::uint64_t budget) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("spex_bruteforce is capped at n <= 9");
  if (t < 2) throw std::invalid_argument("forbidden clique size must be >= 2");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

  SpexReport report;
  report.n = n;
  report.t = t;
  SpectralOptions opts;
  opts.tol = tol;

  std::vector<std::pair<Graph, double>> admitted;
  for (const Graph& g : all_graphs_up_to_iso(n)) {
    ++report.search_space;
    if (!is_kt_free(g, t)) continue;
    OnePlanarVerdict verdict = is_one_planar(g, budget);
    if (verdict.status == OnePlanarStatus::unknown) {
      ++report.unknown_count;
      report.complete = false;
      continue;
    }
    if (verdict.status == OnePlanarStatus::no) continue;
    admitted.emplace_back(g, spectral_radius(g, opts).lambda);
  }
  for (const auto& [g, lambda] : admitted)
    report.lambda_max = std::max(report.lambda_max, lambda);
  for (const auto& [g, lambda] : admitted)
    if (lambda >= report.lambda_max - 2 * tol)
      report.maximizers.emplace_back(canonical_graph(g), lambda);
  std::sort(report.maximizers.begin(), report.maximizers.end(),
            [](const auto& a, const auto& b) {
              return canonical_form(a.first) < canonical_form(b.first);
            });
  return report;
}

namespace {

// SPEX1P_THREADS caps the worker count; workers share nothing and results
// merge in index order, so output stays deterministic.
int worker_count(std::size_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SPEX1P_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && cap < static_cast<long>(hw)) hw = static_cast<unsigned>(cap);
  }
  return static_cast<int>(std::min<std::size_t>(hw, std::max<std::size_t>(jobs, 1)));
}

std::vector<DuelRow> duel_rows_at(int t, int n, double tol) {
  SpectralOptions opts;
  opts.tol = tol;
  int variants = spex_candidate_variant_count(t, n);
  std::vector<DuelRow> here;
  double lambda_max = 0.0;
  for (int v = 0; v < variants; ++v) {
    SpexCandidate cand = spex_candidate(t, n, v);
    DuelRow row;
    row.n = n;
    row.t = t;
    row.candidate = cand.name;
    row.lambda = spectral_radius(cand.graph, opts).lambda;
    lambda_max = std::max(lambda_max, row.lambda);
    here.push_back(std::move(row));
  }
  std::string winner = "tie";
  int leaders = 0;
  for (const auto& row : here)
    if (row.lambda >= lambda_max - 2 * tol) {
      ++leaders;
      winner = row.candidate;
    }
  if (leaders != 1) winner = "tie";
  for (auto& row : here) {
    row.gap = lambda_max - row.lambda;
    row.winner = winner;
  }
  return here;
}

}  // namespace

std::vector<DuelRow> candidate_duel(int t, int lo, int hi, int step, double tol) {
  if (t != 5 && t != 6)
    throw std::invalid_argument("candidate_duel supports t = 5 (and the t = 6 sanity row)");
  if (step <= 0 || lo > hi) throw std::invalid_argument("bad duel range");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

  std::vector<int> ns;
  for (int n = lo; n <= hi; n += step) ns.push_back(n);
  std::vector<std::vector<DuelRow>> slots(ns.size());
  const int workers = worker_count(ns.size());
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < ns.size(); i = next.fetch_add(1))
        slots[i] = duel_rows_at(t, ns[i], tol);
    });
  for (auto& th : pool) th.join();

  std::vector<DuelRow> rows;
  for (auto& slot : slots)
    for (auto& row : slot) rows.push_back(std::move(row));
  return rows;
}

namespace {

struct InequalityDef {
  const char* name;
  // lhs > rhs is the audited statement; some require lambda > 7 to make the
  // Perron upper bound 2/(lambda - 7) meaningful
  double (*lhs)(double);
  double (*rhs)(double);
  bool needs_lambda_above_7;
};

const InequalityDef kInequalities[] = {
    {"sec3-8-4", [](double l) { return 8.0 / ((l - 7) * (l - 7)); },
     [](double l) { return 4.0 / (l * l); }, true},
    {"sec5-44-40", [](double l) { return 44.0 / ((l - 7) * (l - 7)); },
     [](double l) { return 40.0 / (l * l); }, true},
    {"lem2.2-closing", [](double l) { return 2.0 / (5.0 * l); },
     [](double l) { return 38400.0 / (l * l); }, false},
};

const InequalityDef& find_inequality(const std::string& name) {
  for (const auto& def : kInequalities)
    if (name == def.name) return def;
  throw std::invalid_argument("unknown inequality name: " + name);
}

double lambda_at(long long n) { return std::sqrt(2.0 * static_cast<double>(n) - 4.0); }

}  // namespace

std::vector<std::string> inequality_names() {
  std::vector<std::string> out;
  for (const auto& def : kInequalities) out.emplace_back(def.name);
  return out;
}

InequalityAudit inequality_audit_at_lambda(const std::string& name, double lambda) {
  const InequalityDef& def = find_inequality(name);
  InequalityAudit audit;
  audit.name = name;
  audit.lambda = lambda;
  audit.lhs = def.lhs(lambda);
  audit.rhs = def.rhs(lambda);
  audit.holds = audit.lhs > audit.rhs && (!def.needs_lambda_above_7 || lambda > 7.0);
  return audit;
}

InequalityAudit inequality_audit_at_n(const std::string& name, long long n) {
  if (n < 4) throw std::invalid_argument("audit requires n >= 4");
  return inequality_audit_at_lambda(name, lambda_at(n));
}

InequalityAudit inequality_audit_scan(const std::string& name) {
  find_inequality(name);  // validate early
  auto holds_at = [&](long long n) { return inequality_audit_at_n(name, n).holds; };
  long long lo = 4, hi = 20'000'000'000LL;
  if (!holds_at(hi))
    throw std::runtime_error("inequality does not hold within the scan range");
  if (holds_at(lo)) {
    InequalityAudit audit = inequality_audit_at_n(name, lo);
    audit.threshold_n = lo;
    return audit;
  }
  while (lo + 1 < hi) {
    long long mid = lo + (hi - lo) / 2;
    (holds_at(mid) ? hi : lo) = mid;
  }
  // lo fails, hi holds
  InequalityAudit audit = inequality_audit_at_n(name, hi);
  audit.threshold_n = hi;
  return audit;
}

namespace {

Edge cyc(int j, int m) { return make_edge(j % m, (j + 1) % m); }
Edge chord(int j, int m) { return make_edge(j % m, (j + 2) % m); }

Graph two_apex_cycle_square(int m, const std::vector<Edge>& deleted) {
  std::vector<Edge> es;
  for (int j = 0; j < m; ++j) es.push_back(cyc(j, m));
  for (int j = 0; j < m; ++j) es.push_back(chord(j, m));
  std::vector<Edge> kept;
  for (const Edge& e : es)
    if (std::find(deleted.begin(), deleted.end(), e) == deleted.end())
      kept.push_back(e);
  for (int v = 0; v < m; ++v) {
    kept.push_back(make_edge(v, m));
    kept.push_back(make_edge(v, m + 1));
  }
  return Graph::from_edge_list(m + 2, kept);
}

DrawingCertificate chords_cross_spokes(const Graph& g, int m) {
  std::vector<std::pair<Edge, Edge>> pairs;
  for (int j = 0; j < m; ++j) {
    Edge hj = chord(j, m);
    if (!g.has_edge(hj.first, hj.second)) continue;
    pairs.emplace_back(hj, make_edge(j % 2 == 0 ? m : m + 1, (j + 1) % m));
  }
  return DrawingCertificate::from_pairs(std::move(pairs));
}

struct ReplayInstance {
  Graph before;
  Graph after;
  std::vector<Edge> added;
  std::vector<Edge> removed;
  int t = 4;
  const char* bound_name = "sec3-8-4";
  bool use_relabeled_vector = false;
  int chain_k = 0;
};

ReplayInstance build_replay(const std::string& name, int n) {
  ReplayInstance inst;
  const int m = n - 2;
  if (name == "k4-case1-base") {
    if (n % 2 != 0 || n < 12)
      throw std::invalid_argument("k4-case1-base needs even n >= 12");
    std::vector<Edge> dels = {chord(0, m), chord(1, m)};
    for (int j = 3; j < m; j += 2) dels.push_back(cyc(j, m));
    inst.before = two_apex_cycle_square(m, dels);
    inst.added = {chord(0, m), chord(1, m)};
    inst.removed = {cyc(1, m)};
    inst.after = inst.before.with_edges(inst.added, inst.removed);
    inst.t = 4;
    inst.bound_name = "sec3-8-4";
    return inst;
  }
  if (name == "k4-case1-chain") {
    if (n % 2 != 0 || n < 14)
      throw std::invalid_argument("k4-case1-chain needs even n >= 14");
    const int k = 3;
    std::vector<Edge> dels = {chord(0, m)};
    for (int j = 2; j <= 2 * k - 2; j += 2) dels.push_back(cyc(j, m));
    dels.push_back(chord(2 * k - 1, m));
    for (int j = 2 * k + 1; j < m; j += 2) dels.push_back(cyc(j, m));
    inst.before = two_apex_cycle_square(m, dels);
    for (int j = 2; j <= 2 * k - 2; j += 2) inst.added.push_back(cyc(j, m));
    inst.added.push_back(chord(0, m));
    inst.added.push_back(chord(2 * k - 1, m));
    for (int j = 1; j <= 2 * k - 1; j += 2) inst.removed.push_back(cyc(j, m));
    inst.after = inst.before.with_edges(inst.added, inst.removed);
    inst.t = 4;
    inst.bound_name = "sec3-8-4";
    inst.use_relabeled_vector = true;
    inst.chain_k = k;
    return inst;
  }
  if (name == "k5-case2") {
    if (n % 2 != 0 || n < 14)
      throw std::invalid_argument("k5-case2 needs even n >= 14");
    // crossing spokes cut v_0, v_1 off from the far end of the circle
    std::vector<Edge> dels = {cyc(m - 1, m), chord(m - 2, m), chord(m - 1, m),
                              cyc(1, m)};
    inst.before = two_apex_cycle_square(m, dels);
    // the ten-edge rewiring: clear both 4-vertex blocks, then re-add the two
    // 5-edge configurations and the closing edge; most re-added edges
    // coincide with removed ones, the net effect restores cyc(1) and cyc(m-1)
    inst.added = {cyc(1, m), cyc(m - 1, m)};
    inst.removed = {};
    inst.after = inst.before.with_edges(inst.added, inst.removed);
    inst.t = 5;
    inst.bound_name = "sec5-44-40";
    return inst;
  }
  throw std::invalid_argument("unknown replay name: " + name);
}

}  // namespace

std::vector<std::string> replay_names() {
  return {"k4-case1-base", "k4-case1-chain", "k5-case2"};
}

ReplayReport rewiring_replay(const std::string& name, int n, double tol) {
  ReplayInstance inst = build_replay(name, n);
  const int m = n - 2;
  SpectralOptions opts;
  opts.tol = tol;

  ReplayReport report;
  report.name = name;
  report.n = n;
  report.t = inst.t;

  SpectralResult before = spectral_radius(inst.before, opts);
  SpectralResult after = spectral_radius(inst.after, opts);
  report.lambda_before = before.lambda;
  report.lambda_after = after.lambda;
  report.margin = after.lambda - before.lambda;
  report.delta =
      rayleigh_delta(inst.before, before.perron, inst.added, inst.removed).delta;

  const double l = before.lambda;
  if (std::string(inst.bound_name) == "sec3-8-4")
    report.paper_bound = 2.0 * (8.0 / ((l - 7) * (l - 7)) - 4.0 / (l * l));
  else
    report.paper_bound = 2.0 * (44.0 / ((l - 7) * (l - 7)) - 40.0 / (l * l));
  report.entry_bounds_hold =
      perron_bounds_audit(inst.before, {m, m + 1}, opts).holds();

  report.kt_free_before = is_kt_free(inst.before, inst.t);
  report.kt_free_after = is_kt_free(inst.after, inst.t);
  report.one_planar_before =
      verify_certificate(inst.before, chords_cross_spokes(inst.before, m));
  report.one_planar_after =
      verify_certificate(inst.after, chords_cross_spokes(inst.after, m));

  if (inst.use_relabeled_vector) {
    // y permutes the even-position entries of x ahead by two, per the chain
    // transformation; ||y||_2 = ||x||_2
    const int k = inst.chain_k;
    std::vector<double> x = before.perron;
    std::vector<double> y = x;
    y[1] = x[2 * k + 1];
    for (int j = 3; j <= 2 * k + 1; j += 2) y[j] = x[j - 2];
    double qx = 0.0, qy = 0.0;
    for (const auto& [u, v] : inst.before.edges()) qx += 2.0 * x[u] * x[v];
    for (const auto& [u, v] : inst.after.edges()) qy += 2.0 * y[u] * y[v];
    report.relabeled_form_increases = qy > qx;
  }
  return report;
}

}  // namespace spex1p
