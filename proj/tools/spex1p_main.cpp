// Command-line front end: constructions, spectral radius, planarity and
// 1-planarity checks, the small-n SPEX oracle, the candidate duel, and the
// inequality audits. Graphs travel as graph6 lines; everything else is JSON
// or CSV with fixed columns.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 budget
// exhausted (Unknown), 3 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spex1p/canonical.hpp"
#include "spex1p/constructions.hpp"
#include "spex1p/extremal.hpp"
#include "spex1p/graph.hpp"
#include "spex1p/graph6.hpp"
#include "spex1p/io_json.hpp"
#include "spex1p/one_planarity.hpp"
#include "spex1p/planarity.hpp"
#include "spex1p/spectral.hpp"

namespace {

using nlohmann::json;
using namespace spex1p;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
  }
};

std::vector<std::string> read_graph_lines(const std::string& input_path) {
  std::vector<std::string> lines;
  std::string line;
  if (input_path.empty() || input_path == "-") {
    while (std::getline(std::cin, line))
      if (!line.empty()) lines.push_back(line);
  } else {
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error("cannot open input file: " + input_path);
    while (std::getline(in, line))
      if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

struct ParsedGraphs {
  std::vector<Graph> graphs;
  std::optional<std::size_t> bad_line;  // 1-based
  std::string error;
};

ParsedGraphs parse_graphs(const std::vector<std::string>& lines) {
  ParsedGraphs out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.graphs.push_back(graph6_decode(lines[i]));
    } catch (const std::exception& e) {
      out.bad_line = i + 1;
      out.error = e.what();
      return out;
    }
  }
  return out;
}

struct Range {
  int lo = 0, hi = 0, step = 1;
};

Range parse_range(const std::string& text) {
  Range r;
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ':')) parts.push_back(std::stoi(piece));
  if (parts.size() < 2 || parts.size() > 3)
    throw std::invalid_argument("range must be a:b or a:b:step");
  r.lo = parts[0];
  r.hi = parts[1];
  r.step = parts.size() == 3 ? parts[2] : 1;
  if (r.step <= 0 || r.lo > r.hi) throw std::invalid_argument("bad range");
  return r;
}

int cmd_construct(const std::string& family, int n, std::optional<int> variant,
                  std::optional<int> t, const std::string& format, const Output& out) {
  FamilySpec spec;
  spec.family = family_from_string(family);
  spec.n = n;
  spec.variant = variant;
  spec.t = t;
  FamilyBuildResult built = build_family(spec);

  if (format == "graph6") {
    out.write(graph6_encode(built.graph) + "\n");
    return kExitOk;
  }
  json j;
  j["schema"] = "spex1p/construct/1";
  j["spec"] = family_spec_to_json(spec);
  j["name"] = built.name;
  j["graph6"] = graph6_encode(built.graph);
  if (built.certificate) {
    j["certificate"] = certificate_to_json(*built.certificate);
    j["certificate_valid"] = verify_certificate(built.graph, *built.certificate);
  }
  json census;
  census["n"] = built.graph.vertex_count();
  census["e"] = built.graph.edge_count();
  std::vector<int> degs = built.graph.degrees();
  std::sort(degs.begin(), degs.end());
  census["degree_sequence"] = degs;
  census["triangles"] = triangle_count(built.graph);
  j["census"] = census;
  out.write(j.dump(2) + "\n");
  return kExitOk;
}

int cmd_spectral(const std::string& input, double tol, const Output& out) {
  ParsedGraphs parsed = parse_graphs(read_graph_lines(input));
  if (parsed.bad_line) {
    std::cerr << "parse error at line " << *parsed.bad_line << ": " << parsed.error
              << "\n";
    return kExitUsage;
  }
  SpectralOptions opts;
  opts.tol = tol;
  std::string text;
  for (const Graph& g : parsed.graphs)
    text += spectral_result_to_json(spectral_radius(g, opts)).dump() + "\n";
  out.write(text);
  return kExitOk;
}

int cmd_check(const std::string& input, const std::string& which, int t,
              std::uint64_t budget, const Output& out) {
  ParsedGraphs parsed = parse_graphs(read_graph_lines(input));
  if (parsed.bad_line) {
    std::cerr << "parse error at line " << *parsed.bad_line << ": " << parsed.error
              << "\n";
    return kExitUsage;
  }
  bool all_pass = true;
  bool any_unknown = false;
  std::string text;
  for (const Graph& g : parsed.graphs) {
    json j;
    j["schema"] = "spex1p/check/1";
    j["n"] = g.vertex_count();
    j["e"] = g.edge_count();
    if (which == "planar") {
      bool ok = is_planar(g);
      j["which"] = "planar";
      j["pass"] = ok;
      all_pass = all_pass && ok;
    } else if (which == "one-planar") {
      OnePlanarVerdict v = is_one_planar(g, budget);
      j["which"] = "one-planar";
      j["verdict"] = verdict_to_json(v);
      j["pass"] = v.status == OnePlanarStatus::yes;
      all_pass = all_pass && v.status == OnePlanarStatus::yes;
      any_unknown = any_unknown || v.status == OnePlanarStatus::unknown;
    } else if (which == "k-free") {
      bool ok = is_kt_free(g, t);
      j["which"] = "k-free";
      j["t"] = t;
      j["pass"] = ok;
      all_pass = all_pass && ok;
    } else if (which == "filters") {
      const int n = g.vertex_count();
      bool edge_ok = n < 3 || g.edge_count() <= 4 * n - 8;
      int degen = degeneracy(g).degeneracy;
      bool k37_ok = !contains_k37(g);
      j["which"] = "filters";
      j["edge_bound_ok"] = edge_ok;
      j["degeneracy"] = degen;
      j["degeneracy_ok"] = degen <= 7;
      j["k37_free"] = k37_ok;
      bool ok = edge_ok && degen <= 7 && k37_ok;
      j["pass"] = ok;
      all_pass = all_pass && ok;
    } else {
      std::cerr << "unknown check: " << which << "\n";
      return kExitUsage;
    }
    text += j.dump() + "\n";
  }
  out.write(text);
  if (any_unknown) return kExitUnknown;
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_spex(int n, int t, double tol, std::uint64_t budget,
             const std::string& format, const Output& out) {
  SpexReport report = spex_bruteforce(n, t, tol, budget);
  if (format == "csv")
    out.write(spex_report_to_csv(report));
  else
    out.write(spex_report_to_json(report).dump(2) + "\n");
  return report.complete ? kExitOk : kExitUnknown;
}

int cmd_duel(int t, const std::string& range, double tol, const std::string& format,
             const Output& out) {
  Range r = parse_range(range);
  auto rows = candidate_duel(t, r.lo, r.hi, r.step, tol);
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows)
      arr.push_back({{"n", row.n},
                     {"t", row.t},
                     {"candidate", row.candidate},
                     {"lambda", row.lambda},
                     {"gap", row.gap},
                     {"winner", row.winner},
                     {"complete", row.complete}});
    json j;
    j["schema"] = "spex1p/duel/1";
    j["rows"] = arr;
    out.write(j.dump(2) + "\n");
  } else {
    out.write(duel_rows_to_csv(rows));
  }
  return kExitOk;
}

int cmd_audit(const std::string& name, std::optional<long long> n, bool scan,
              const Output& out) {
  InequalityAudit audit;
  if (scan)
    audit = inequality_audit_scan(name);
  else if (n)
    audit = inequality_audit_at_n(name, *n);
  else
    throw std::invalid_argument("audit needs --n or --scan");
  out.write(audit_to_json(audit).dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral extremal toolkit for 1-planar graph families"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "output file (default stdout)");

  double tol = 1e-10;
  app.add_option("--tol", tol, "spectral tolerance")->check(CLI::PositiveNumber);
  std::uint64_t budget = 10'000'000;
  app.add_option("--budget", budget, "search node budget")
      ->check(CLI::PositiveNumber);

  // construct
  auto* construct = app.add_subcommand("construct", "build a named family");
  construct->fallthrough();
  std::string family;
  int cn = 0;
  std::optional<int> variant, ct;
  std::string cformat = "json";
  construct->add_option("--family", family, "family name")->required();
  construct->add_option("--n", cn, "vertex count")->required();
  construct->add_option("--variant", variant, "family member index");
  construct->add_option("--t", ct, "forbidden clique size (spex family)");
  construct->add_option("--format", cformat, "json|graph6")
      ->check(CLI::IsMember({"json", "graph6"}));

  // spectral
  auto* spectral = app.add_subcommand("spectral", "spectral radius of graph6 input");
  spectral->fallthrough();
  std::string sinput;
  spectral->add_option("input", sinput, "graph6 file ('-' = stdin)");

  // check
  auto* check = app.add_subcommand("check", "planarity / 1-planarity / clique checks");
  check->fallthrough();
  std::string kinput, which = "one-planar";
  int kt = 3;
  check->add_option("input", kinput, "graph6 file ('-' = stdin)");
  check->add_option("--which", which, "planar|one-planar|k-free|filters")
      ->check(CLI::IsMember({"planar", "one-planar", "k-free", "filters"}));
  check->add_option("--t", kt, "clique size for k-free");

  // spex
  auto* spex = app.add_subcommand("spex", "brute-force SPEX at small n");
  spex->fallthrough();
  int xn = 0, xt = 3;
  std::string xformat = "csv";
  spex->add_option("--n", xn, "vertex count")->required();
  spex->add_option("--t", xt, "forbidden clique size")->required();
  spex->add_option("--format", xformat, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // duel
  auto* duel = app.add_subcommand("duel", "candidate duel over a range of n");
  duel->fallthrough();
  int dt = 5;
  std::string drange, dformat = "csv";
  duel->add_option("--t", dt, "forbidden clique size (5, or 6 sanity row)");
  duel->add_option("--range", drange, "a:b[:step]")->required();
  duel->add_option("--format", dformat, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // audit
  auto* audit = app.add_subcommand("audit", "evaluate a proof inequality");
  audit->fallthrough();
  std::string aname;
  std::optional<long long> an;
  bool ascan = false;
  audit->add_option("--name", aname, "inequality name")->required();
  audit->add_option("--n", an, "evaluate at this n");
  audit->add_flag("--scan", ascan, "find the smallest n where it holds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output out{out_path};
  try {
    if (*construct) return cmd_construct(family, cn, variant, ct, cformat, out);
    if (*spectral) return cmd_spectral(sinput, tol, out);
    if (*check) return cmd_check(kinput, which, kt, budget, out);
    if (*spex) return cmd_spex(xn, xt, tol, budget, xformat, out);
    if (*duel) return cmd_duel(dt, drange, tol, dformat, out);
    if (*audit) return cmd_audit(aname, an, ascan, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
