#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spex1p/graph.hpp"

namespace spex1p {

struct SpexReport {
  int n = 0;
  int t = 0;
  double lambda_max = 0.0;
  // canonical maximizer graphs with their spectral radii, within 2*tol of max
  std::vector<std::pair<Graph, double>> maximizers;
  std::uint64_t search_space = 0;  // isomorphism classes examined
  bool complete = true;
  std::uint64_t unknown_count = 0;
};

// Exhaustive SPEX over all isomorphism classes on n vertices (hard cap n <= 9,
// refused above). `complete` is false iff any 1-planarity verdict ran out of
// budget; those graphs are counted, never silently dropped.
SpexReport spex_bruteforce(int n, int t, double tol = 1e-10,
                           std::uint64_t budget = 10'000'000);

struct DuelRow {
  int n = 0;
  int t = 5;
  std::string candidate;
  double lambda = 0.0;
  double gap = 0.0;        // lambda_max(n) - lambda
  std::string winner;      // candidate name, or "tie"
  bool complete = true;
};

// Evaluates every theorem candidate at each n in {lo, lo+step, ..., <= hi}.
std::vector<DuelRow> candidate_duel(int t, int lo, int hi, int step,
                                    double tol = 1e-10);

struct InequalityAudit {
  std::string name;
  double lambda = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  std::optional<long long> threshold_n;  // smallest n where it holds, when scanned
};

std::vector<std::string> inequality_names();
InequalityAudit inequality_audit_at_lambda(const std::string& name, double lambda);
// evaluates at lambda = sqrt(2n - 4), the paper's standing lower bound
InequalityAudit inequality_audit_at_n(const std::string& name, long long n);
InequalityAudit inequality_audit_scan(const std::string& name);

struct ReplayReport {
  std::string name;
  int n = 0;
  int t = 0;
  double lambda_before = 0.0;
  double lambda_after = 0.0;
  double margin = 0.0;
  double delta = 0.0;        // x^T A_G' x - x^T A_G x with x = Perron(G)
  double paper_bound = 0.0;  // the quoted closed-form bound at lambda_before
  bool entry_bounds_hold = false;
  bool kt_free_before = false;
  bool kt_free_after = false;
  bool one_planar_before = false;
  bool one_planar_after = false;
  // for the chain replay: y^T A_G' y > x^T A_G x with the relabeled vector
  std::optional<bool> relabeled_form_increases;
};

std::vector<std::string> replay_names();
ReplayReport rewiring_replay(const std::string& name, int n, double tol = 1e-10);

}  // namespace spex1p
