#include "spex1p/io_json.hpp"

#include <cstdio>

#include "spex1p/graph6.hpp"

namespace spex1p {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json certificate_to_json(const DrawingCertificate& cert) {
  json arr = json::array();
  for (const auto& [a, b] : cert.pairs)
    arr.push_back({a.first, a.second, b.first, b.second});
  return arr;
}

DrawingCertificate certificate_from_json(const json& j) {
  std::vector<std::pair<Edge, Edge>> pairs;
  for (const auto& quad : j) {
    if (!quad.is_array() || quad.size() != 4)
      throw std::invalid_argument("certificate entries must be [u1,v1,u2,v2]");
    pairs.emplace_back(make_edge(quad[0].get<int>(), quad[1].get<int>()),
                       make_edge(quad[2].get<int>(), quad[3].get<int>()));
  }
  return DrawingCertificate::from_pairs(std::move(pairs));
}

json family_spec_to_json(const FamilySpec& spec) {
  json j;
  j["family"] = family_to_string(spec.family);
  j["n"] = spec.n;
  if (spec.variant) j["variant"] = *spec.variant;
  if (spec.t) j["t"] = *spec.t;
  return j;
}

FamilySpec family_spec_from_json(const json& j) {
  FamilySpec spec;
  spec.family = family_from_string(j.at("family").get<std::string>());
  spec.n = j.at("n").get<int>();
  if (j.contains("variant")) spec.variant = j["variant"].get<int>();
  if (j.contains("t")) spec.t = j["t"].get<int>();
  return spec;
}

json spectral_result_to_json(const SpectralResult& r) {
  json j;
  j["schema"] = "spex1p/spectral/1";
  j["lambda"] = r.lambda;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  j["perron"] = r.perron;
  return j;
}

json verdict_to_json(const OnePlanarVerdict& v) {
  json j;
  j["schema"] = "spex1p/verdict/1";
  switch (v.status) {
    case OnePlanarStatus::yes: j["status"] = "yes"; break;
    case OnePlanarStatus::no: j["status"] = "no"; break;
    case OnePlanarStatus::unknown: j["status"] = "unknown"; break;
  }
  if (v.reason) {
    switch (*v.reason) {
      case OnePlanarReason::edge_bound: j["reason"] = "edge-bound"; break;
      case OnePlanarReason::k37: j["reason"] = "k37"; break;
      case OnePlanarReason::search_exhausted: j["reason"] = "search-exhausted"; break;
    }
  }
  if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
  j["expansions"] = v.expansions;
  return j;
}

json spex_report_to_json(const SpexReport& r) {
  json j;
  j["schema"] = "spex1p/spex-report/1";
  j["n"] = r.n;
  j["t"] = r.t;
  j["lambda_max"] = r.lambda_max;
  j["search_space"] = r.search_space;
  j["complete"] = r.complete;
  j["unknown_count"] = r.unknown_count;
  json maxi = json::array();
  for (const auto& [g, lambda] : r.maximizers)
    maxi.push_back({{"graph6", graph6_encode(g)}, {"lambda", lambda}});
  j["maximizers"] = maxi;
  return j;
}

json audit_to_json(const InequalityAudit& a) {
  json j;
  j["schema"] = "spex1p/audit/1";
  j["name"] = a.name;
  j["lambda"] = a.lambda;
  j["lhs"] = a.lhs;
  j["rhs"] = a.rhs;
  j["holds"] = a.holds;
  if (a.threshold_n) j["threshold_n"] = *a.threshold_n;
  return j;
}

json replay_to_json(const ReplayReport& r) {
  json j;
  j["schema"] = "spex1p/replay/1";
  j["name"] = r.name;
  j["n"] = r.n;
  j["t"] = r.t;
  j["lambda_before"] = r.lambda_before;
  j["lambda_after"] = r.lambda_after;
  j["margin"] = r.margin;
  j["delta"] = r.delta;
  j["paper_bound"] = r.paper_bound;
  j["entry_bounds_hold"] = r.entry_bounds_hold;
  j["kt_free_before"] = r.kt_free_before;
  j["kt_free_after"] = r.kt_free_after;
  j["one_planar_before"] = r.one_planar_before;
  j["one_planar_after"] = r.one_planar_after;
  if (r.relabeled_form_increases)
    j["relabeled_form_increases"] = *r.relabeled_form_increases;
  return j;
}

namespace {

const char* kCsvHeader = "n,t,candidate,lambda,gap,winner,complete\n";

void append_row(std::string& out, int n, int t, const std::string& candidate,
                double lambda, double gap, const std::string& winner, bool complete) {
  out += std::to_string(n);
  out += ',';
  out += std::to_string(t);
  out += ',';
  out += candidate;
  out += ',';
  out += format_double(lambda);
  out += ',';
  out += format_double(gap);
  out += ',';
  out += winner;
  out += ',';
  out += complete ? "true" : "false";
  out += '\n';
}

}  // namespace

std::string duel_rows_to_csv(const std::vector<DuelRow>& rows) {
  std::string out = kCsvHeader;
  for (const auto& r : rows)
    append_row(out, r.n, r.t, r.candidate, r.lambda, r.gap, r.winner, r.complete);
  return out;
}

std::string spex_report_to_csv(const SpexReport& r) {
  std::string out = kCsvHeader;
  std::string winner =
      r.maximizers.empty() ? "" : graph6_encode(r.maximizers.front().first);
  for (const auto& [g, lambda] : r.maximizers)
    append_row(out, r.n, r.t, graph6_encode(g), lambda, r.lambda_max - lambda,
               winner, r.complete);
  return out;
}

}  // namespace spex1p
