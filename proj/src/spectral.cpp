#include "spex1p/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace spex1p {

namespace {

// Power iteration restricted to one component (support of `mask`). The +I
// shift keeps the iteration convergent on bipartite components.
SpectralResult power_iterate(const Graph& g, const std::vector<char>& mask,
                             const SpectralOptions& opts) {
  const int n = g.vertex_count();
  std::vector<double> x(n, 0.0), y(n, 0.0);
  int support = 0;
  for (int v = 0; v < n; ++v)
    if (mask[v]) {
      x[v] = 1.0;
      ++support;
    }
  SpectralResult result;
  if (support == 0) return result;
  double norm0 = std::sqrt(static_cast<double>(support));
  for (double& e : x) e /= norm0;

  double lambda = 0.0;
  for (std::int64_t it = 1; it <= opts.max_iterations; ++it) {
    // y = A x (within the component), then Rayleigh quotient and residual
    std::fill(y.begin(), y.end(), 0.0);
    for (const auto& [u, v] : g.edges()) {
      y[u] += x[v];
      y[v] += x[u];
    }
    double num = 0.0;
    for (int v = 0; v < n; ++v) num += x[v] * y[v];
    lambda = num;  // x is kept 2-normalized
    double res2 = 0.0, mxcur = 0.0;
    for (int v = 0; v < n; ++v) {
      double r = y[v] - lambda * x[v];
      res2 += r * r;
      mxcur = std::max(mxcur, std::abs(x[v]));
    }
    result.iterations = it;
    // the tolerance applies to the max-norm-1 rescaling of x
    if (std::sqrt(res2) <= opts.tol * mxcur || support == 1) {
      result.lambda = lambda;
      break;
    }
    // next iterate: (A + I) x, renormalized
    double norm = 0.0;
    for (int v = 0; v < n; ++v) {
      y[v] += x[v];
      norm += y[v] * y[v];
    }
    norm = std::sqrt(norm);
    for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
    if (it == opts.max_iterations) {
      result.lambda = lambda;
      result.perron = std::move(x);
      // report the max-norm residual of the final iterate
      std::fill(y.begin(), y.end(), 0.0);
      for (const auto& [u, v] : g.edges()) {
        y[u] += result.perron[v];
        y[v] += result.perron[u];
      }
      double rinf = 0.0;
      for (int v = 0; v < n; ++v)
        rinf = std::max(rinf, std::abs(y[v] - lambda * result.perron[v]));
      result.residual = rinf;
      throw ConvergenceError(std::move(result));
    }
  }

  // normalize to max-norm 1 with positive entries
  double mx = 0.0;
  for (int v = 0; v < n; ++v) mx = std::max(mx, std::abs(x[v]));
  if (mx > 0.0) {
    double sign = 1.0;
    for (int v = 0; v < n; ++v)
      if (std::abs(x[v]) == mx) {
        sign = x[v] < 0 ? -1.0 : 1.0;
        break;
      }
    for (double& e : x) e = e * sign / mx;
  } else {
    // single isolated vertex component
    for (int v = 0; v < n; ++v)
      if (mask[v]) x[v] = 1.0;
  }
  std::fill(y.begin(), y.end(), 0.0);
  for (const auto& [u, v] : g.edges()) {
    y[u] += x[v];
    y[v] += x[u];
  }
  double rinf = 0.0;
  for (int v = 0; v < n; ++v) rinf = std::max(rinf, std::abs(y[v] - lambda * x[v]));
  result.lambda = lambda;
  result.perron = std::move(x);
  result.residual = rinf;
  return result;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("spectral_radius requires n >= 1");
  if (opts.tol <= 0) throw std::invalid_argument("tolerance must be positive");

  std::vector<int> comp = component_labels(g);
  int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  if (ncomp == 1) {
    std::vector<char> all(n, 1);
    return power_iterate(g, all, opts);
  }
  SpectralResult best;
  bool have = false;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<char> mask(n, 0);
    for (int v = 0; v < n; ++v) mask[v] = comp[v] == c;
    SpectralResult r = power_iterate(g, mask, opts);
    if (!have || r.lambda > best.lambda + opts.tol) {
      best = std::move(r);
      have = true;
    }
  }
  return best;
}

double rayleigh_quotient(const Graph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw std::invalid_argument("vector size must match vertex count");
  double den = 0.0;
  for (double e : x) den += e * e;
  if (den == 0.0) throw std::invalid_argument("rayleigh_quotient rejects the zero vector");
  double num = 0.0;
  for (const auto& [u, v] : g.edges()) num += 2.0 * x[u] * x[v];
  return num / den;
}

RayleighDelta rayleigh_delta(const Graph& g, std::span<const double> x,
                             std::span<const Edge> added, std::span<const Edge> removed) {
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw std::invalid_argument("vector size must match vertex count");
  RayleighDelta out;
  double delta = 0.0;
  for (const Edge& e : added) {
    Edge key = make_edge(e.first, e.second);
    if (g.has_edge(key.first, key.second))
      throw std::invalid_argument("rayleigh_delta: added edge already present");
    if (key.first < 0 || key.second >= g.vertex_count() || key.first == key.second)
      throw std::invalid_argument("rayleigh_delta: invalid added edge");
    out.added.push_back(key);
    delta += 2.0 * x[key.first] * x[key.second];
  }
  for (const Edge& e : removed) {
    Edge key = make_edge(e.first, e.second);
    if (!g.has_edge(key.first, key.second))
      throw std::invalid_argument("rayleigh_delta: removed edge not present");
    out.removed.push_back(key);
    delta -= 2.0 * x[key.first] * x[key.second];
  }
  out.delta = delta;
  return out;
}

PerronBoundsReport perron_bounds_audit(const Graph& g, Edge apexes,
                                       const SpectralOptions& opts) {
  const int n = g.vertex_count();
  Edge ap = make_edge(apexes.first, apexes.second);
  if (ap.first < 0 || ap.second >= n)
    throw std::invalid_argument("apex out of range");
  for (int v = 0; v < n; ++v) {
    if (v == ap.first || v == ap.second) continue;
    if (!g.has_edge(v, ap.first) || !g.has_edge(v, ap.second))
      throw std::invalid_argument(
          "apex pair does not span a complete bipartite K_{2,n-2}");
  }
  SpectralResult r = spectral_radius(g, opts);
  PerronBoundsReport report;
  report.lambda = r.lambda;
  report.lower_bound = 2.0 / r.lambda;
  report.upper_bound = 2.0 / (r.lambda - 7.0);
  double mn = 2.0, mx = 0.0, amn = 2.0;
  for (int v = 0; v < n; ++v) {
    if (v == ap.first || v == ap.second) {
      amn = std::min(amn, r.perron[v]);
      continue;
    }
    mn = std::min(mn, r.perron[v]);
    mx = std::max(mx, r.perron[v]);
  }
  report.min_entry = mn;
  report.max_entry = mx;
  // allow the closed-form-tight case (K_{2,n-2} itself) a little slack
  double slack = 64.0 * opts.tol;
  report.lower_holds = mn >= report.lower_bound - slack;
  report.upper_holds = r.lambda > 7.0 && mx <= report.upper_bound + slack;
  report.apexes_are_largest = amn >= mx - slack;
  return report;
}

ComparisonResult compare_candidates(const Graph& g1, const Graph& g2, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  SpectralOptions opts;
  opts.tol = tol;
  ComparisonResult out;
  out.lambda1 = spectral_radius(g1, opts).lambda;
  out.lambda2 = spectral_radius(g2, opts).lambda;
  if (std::abs(out.lambda1 - out.lambda2) <= 2 * tol)
    out.ordering = Ordering::indistinguishable;
  else
    out.ordering = out.lambda1 > out.lambda2 ? Ordering::first_larger
                                             : Ordering::second_larger;
  return out;
}

}  // namespace spex1p
