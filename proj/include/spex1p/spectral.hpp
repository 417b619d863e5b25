#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "spex1p/graph.hpp"

namespace spex1p {

struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> perron;  // normalized to max-norm 1
  double residual = 0.0;       // ||A x - lambda x||_inf at return
  std::int64_t iterations = 0;
};

struct SpectralOptions {
  double tol = 1e-10;
  std::int64_t max_iterations = 1'000'000;
};

class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(SpectralResult partial)
      : std::runtime_error("power iteration did not converge"), best(std::move(partial)) {}
  SpectralResult best;
};

// Power iteration on A + I (all-ones start, Rayleigh extraction). For a
// disconnected graph the result is the max over components, Perron vector
// zero outside the winning component (ties to the lowest vertex label).
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {});

// x^T A x / x^T x; rejects the zero vector.
double rayleigh_quotient(const Graph& g, std::span<const double> x);

struct RayleighDelta {
  std::vector<Edge> added;
  std::vector<Edge> removed;
  double delta = 0.0;  // x^T A_G' x - x^T A_G x
};

// Rejects added edges already present and removed edges absent.
RayleighDelta rayleigh_delta(const Graph& g, std::span<const double> x,
                             std::span<const Edge> added, std::span<const Edge> removed);

struct PerronBoundsReport {
  double lambda = 0.0;
  double min_entry = 0.0;
  double max_entry = 0.0;
  double lower_bound = 0.0;  // 2 / lambda
  double upper_bound = 0.0;  // 2 / (lambda - 7), meaningful only for lambda > 7
  bool lower_holds = false;
  bool upper_holds = false;
  bool apexes_are_largest = false;
  bool holds() const { return lower_holds && upper_holds && apexes_are_largest; }
};

// Requires every vertex outside the apex pair to be adjacent to both apexes.
PerronBoundsReport perron_bounds_audit(const Graph& g, Edge apexes,
                                       const SpectralOptions& opts = {});

enum class Ordering { first_larger, second_larger, indistinguishable };

struct ComparisonResult {
  Ordering ordering = Ordering::indistinguishable;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

// Never claims a strict order when |lambda1 - lambda2| <= 2 tol.
ComparisonResult compare_candidates(const Graph& g1, const Graph& g2, double tol);

}  // namespace spex1p
