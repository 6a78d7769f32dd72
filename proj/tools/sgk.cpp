// sgk: desk-scale experiments on stable Kneser graphs.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sgk/charclasses.hpp"
#include "sgk/complexes.hpp"
#include "sgk/geometry.hpp"
#include "sgk/graphs.hpp"
#include "sgk/matroid.hpp"
#include "sgk/serialize.hpp"
#include "sgk/workers.hpp"

namespace {

using sgk::json;

struct RunConfig {
  bool pretty = false;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t samples = 100000;
  double zero_tol = sgk::kDefaultZeroTol;
  double tol = 1e-9;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected A..B, got '" + text + "'");
  }
  if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range '" + text + "'");
  return r;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + cfg.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<std::size_t> sphere_betti(int k) {
  if (k == 0) return {2};
  std::vector<std::size_t> b(k + 1, 0);
  b[0] = 1;
  b[k] = 1;
  return b;
}

int cmd_graph(const RunConfig& cfg, int n, int k, bool chromatic, bool critical, bool aut, bool kneser,
              const std::string& format) {
  const sgk::Graph g = kneser ? sgk::kneser_graph(n, k) : sgk::stable_kneser_graph(n, k);
  if (format == "dimacs") {
    emit(cfg, sgk::graph_to_dimacs(g));
    return 0;
  }
  bool ok = true;
  json j;
  j["command"] = "graph";
  j["family"] = kneser ? "KG" : "SG";
  j["n"] = n;
  j["k"] = k;
  j["m"] = 2 * n + k;
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  if (chromatic) {
    const auto c = sgk::chromatic_number(g);
    j["chi"] = c.chromatic_number;
    j["colouring"] = c.colours;
    if (!sgk::is_proper_colouring(g, c.colours)) ok = false;
    if (!kneser && c.chromatic_number != k + 2) ok = false;
  }
  if (critical) {
    const bool crit = sgk::vertex_criticality_check(g);
    j["critical"] = crit;
    if (!kneser && !crit) ok = false;
  }
  if (aut) {
    try {
      j["aut_order"] = sgk::automorphism_group_order(g);
    } catch (const sgk::TooLarge& e) {
      j["aut_order"] = nullptr;
      j["aut_error"] = e.what();
    }
  }
  j["graph"] = sgk::graph_to_json(g);
  j["ok"] = ok;
  if (cfg.pretty) {
    std::ostringstream os;
    os << (kneser ? "KG" : "SG") << "(" << n << "," << k << "): " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    if (j.contains("chi")) os << "  chi          " << j["chi"] << "\n";
    if (j.contains("critical")) os << "  critical     " << j["critical"] << "\n";
    if (j.contains("aut_order")) os << "  |Aut|        " << j["aut_order"] << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, dump(j));
  }
  return ok ? 0 : 1;
}

int cmd_homology(const RunConfig& cfg, int n, int k, const std::string& facets_out, const std::string& boundary_out) {
  const sgk::Graph g = sgk::stable_kneser_graph(n, k);
  const auto P = sgk::hom_poset(sgk::complete_graph(2), g);
  const auto X = sgk::order_complex(P);
  const auto N = sgk::neighbourhood_complex(g);
  const auto hb = sgk::z2_betti(X);
  const auto nb = sgk::z2_betti(N);
  const auto expected = sphere_betti(k);
  const bool ok = hb == expected && nb == expected && sgk::boundary_squares_to_zero(X);
  if (!facets_out.empty()) {
    std::ofstream f(facets_out);
    f << json{{"hom_order_complex", sgk::complex_to_json(X)}, {"neighbourhood_complex", sgk::complex_to_json(N)}}.dump() << "\n";
  }
  if (!boundary_out.empty())
    for (int d = 1; d <= X.dimension(); ++d) {
      std::ofstream f(boundary_out + "_d" + std::to_string(d) + ".mtx");
      f << sgk::boundary_matrix_market(X, d);
    }
  json j;
  j["command"] = "homology";
  j["n"] = n;
  j["k"] = k;
  j["hom_cells"] = P.size();
  j["hom_atoms"] = P.minimal_elements().size();
  j["order_complex_facets"] = X.facets.size();
  j["hom_betti"] = hb;
  j["neighbourhood_betti"] = nb;
  j["expected_betti"] = expected;
  j["ok"] = ok;
  if (cfg.pretty) {
    std::ostringstream os;
    os << "Hom(K_2, SG(" << n << "," << k << ")): " << P.size() << " cells, Betti " << join(hb) << "\n";
    os << "N(SG(" << n << "," << k << ")): Betti " << join(nb) << "\n";
    os << "expected " << join(expected) << (ok ? "  ok\n" : "  MISMATCH\n");
    emit(cfg, os.str());
  } else {
    emit(cfg, dump(j));
  }
  return ok ? 0 : 1;
}

int cmd_matroid(const RunConfig& cfg, int m, int k, bool list) {
  const auto cov = sgk::enumerate_covectors(m, k);
  std::size_t cocircuits = 0;
  for (const auto& s : cov) cocircuits += s.zero_count() == k ? 1 : 0;
  const auto real = sgk::verify_realization(m, k, cfg.samples, cfg.seed, cfg.zero_tol);
  json j;
  j["command"] = "matroid";
  j["m"] = m;
  j["k"] = k;
  j["covectors"] = cov.size();
  j["cocircuits"] = cocircuits;
  j["realization"] = sgk::realization_to_json(real);
  if (list) j["list"] = sgk::covectors_to_json(m, k, cov)["covectors"];
  j["ok"] = real.pass();
  if (cfg.pretty) {
    std::ostringstream os;
    os << "C^{" << m << "," << k + 1 << "}: " << cov.size() << " covectors, " << cocircuits << " cocircuits\n";
    os << "realization " << (real.pass() ? "pass" : "FAIL") << " (topes sampled " << real.topes_sampled << "/"
       << real.topes_expected << ", constructed " << real.topes_constructed << ", cocircuits " << real.cocircuits_realized
       << "/" << real.cocircuits << ")\n";
    if (list)
      for (const auto& s : cov) os << "  " << s.to_string() << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, dump(j));
  }
  return real.pass() ? 0 : 1;
}

int cmd_classify(const RunConfig& cfg, int k, Range nr, int max_degree) {
  std::vector<sgk::ClassificationReport> rows(static_cast<std::size_t>(nr.hi - nr.lo + 1));
  sgk::parallel_for(rows.size(), [&](std::size_t i) { rows[i] = sgk::classify(nr.lo + static_cast<int>(i), k, max_degree); });
  bool ok = true;
  json list = json::array();
  for (const auto& r : rows) {
    const auto w = sgk::total_sw_class(r.n, r.k, max_degree);
    if (w != sgk::total_sw_class_from_blocks(r.n, r.k, max_degree)) ok = false;
    const auto wb = w.invert();
    if (!(w * wb == sgk::GradedPoly::one(w.ring(), max_degree))) ok = false;
    for (const auto& win : sgk::vanishing_windows(r.n, r.k))
      for (int d = win.lo; d < win.hi && d <= max_degree; ++d)
        if (!wb.vanishes_in_degree(d)) ok = false;
    list.push_back(sgk::classification_to_json(r));
  }
  json j;
  j["command"] = "classify";
  j["k"] = k;
  j["n_range"] = {nr.lo, nr.hi};
  j["max_degree"] = max_degree;
  j["rows"] = std::move(list);
  j["ok"] = ok;
  if (cfg.pretty) {
    std::ostringstream os;
    os << std::left << std::setw(5) << "n" << std::setw(5) << "k" << std::setw(12) << "ring" << std::setw(26) << "verdict"
       << "vanishing (first 8)\n";
    for (const auto& r : rows) {
      std::string v;
      for (std::size_t i = 0; i < r.vanishing.size() && i < 8; ++i) v += (i ? "," : "") + std::to_string(r.vanishing[i]);
      os << std::setw(5) << r.n << std::setw(5) << r.k << std::setw(12) << sgk::to_string(r.ring) << std::setw(26)
         << sgk::to_string(r.verdict) << v << "\n";
    }
    emit(cfg, os.str());
  } else {
    emit(cfg, dump(j));
  }
  return ok ? 0 : 1;
}

int cmd_geometry(const RunConfig& cfg, int n, int k, bool sweep, Range nr) {
  std::vector<sgk::GeometryRow> rows = sweep ? sgk::geometry_sweep(k, nr.lo, nr.hi) : std::vector{sgk::geometry_row(n, k)};
  bool ok = true;
  for (const auto& r : rows) {
    if (r.identity_dev >= cfg.tol || r.rep_dev >= cfg.tol || r.v_equivariance_dev >= cfg.tol || !(r.min_norm > 0)) ok = false;
  }
  if (!sweep) {
    const auto eq = sgk::sign_equivariance_check(n, k, std::min<std::size_t>(cfg.samples, 10000), cfg.seed, cfg.zero_tol);
    if (eq.mismatches != 0) ok = false;
  }
  std::string text = sgk::geometry_csv_header();
  for (const auto& r : rows) text += sgk::geometry_csv_line(r);
  emit(cfg, text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable Kneser graph toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_flag("--pretty", cfg.pretty, "Human-readable tables instead of JSON");
  app.add_option("--out", cfg.out, "Write output to a file");
  app.add_option("--seed", cfg.seed, "Seed for sampling");
  app.add_option("--samples", cfg.samples, "Monte-Carlo sample count");
  app.add_option("--zero-tol", cfg.zero_tol, "Zero threshold for sign vectors");
  app.add_option("--tol", cfg.tol, "Tolerance for numeric invariants");

  int n = 0, k = 0, m = 0, max_degree = sgk::kDefaultMaxDegree;
  bool chromatic = false, critical = false, aut = false, kneser = false, list = false, sweep = false;
  std::string format = "json", facets_out, boundary_out, n_range = "2..30";

  auto* graph = app.add_subcommand("graph", "Build SG_{n,k} and report chromatic data");
  graph->add_option("N", n)->required()->check(CLI::PositiveNumber);
  graph->add_option("K", k)->required()->check(CLI::NonNegativeNumber);
  graph->add_flag("--chromatic", chromatic);
  graph->add_flag("--critical", critical);
  graph->add_flag("--aut", aut);
  graph->add_flag("--kneser", kneser, "Use KG_{n,k} instead");
  graph->add_option("--format", format)->check(CLI::IsMember({"json", "dimacs"}));

  auto* homology = app.add_subcommand("homology", "Z2 Betti numbers of Hom(K_2, SG_{n,k}) and N(SG_{n,k})");
  homology->add_option("N", n)->required()->check(CLI::PositiveNumber);
  homology->add_option("K", k)->required()->check(CLI::NonNegativeNumber);
  homology->add_option("--facets-out", facets_out, "Write facet lists as JSON");
  homology->add_option("--boundary-out", boundary_out, "Prefix for MatrixMarket boundary matrices");

  auto* matroid = app.add_subcommand("matroid", "Covectors of C^{m,k+1} and realization check");
  matroid->add_option("M", m)->required()->check(CLI::PositiveNumber);
  matroid->add_option("K", k)->required()->check(CLI::NonNegativeNumber);
  matroid->add_flag("--list", list);

  auto* classify = app.add_subcommand("classify", "Stiefel-Whitney classification over a range of n");
  classify->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  classify->add_option("--n-range", n_range)->required();
  classify->add_option("--max-degree", max_degree)->check(CLI::Range(1, 512));

  auto* geometry = app.add_subcommand("geometry", "Moment-curve norms, edge defects and equivariance deviations (CSV)");
  std::string geo_range;
  geometry->add_option("N", n)->required()->check(CLI::PositiveNumber);
  geometry->add_option("K", k)->required()->check(CLI::NonNegativeNumber);
  geometry->add_flag("--sweep", sweep, "One row per n in --n-range (default 2..N)");
  geometry->add_option("--n-range", geo_range);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*graph) return cmd_graph(cfg, n, k, chromatic, critical, aut, kneser, format);
    if (*homology) return cmd_homology(cfg, n, k, facets_out, boundary_out);
    if (*matroid) return cmd_matroid(cfg, m, k, list);
    if (*classify) return cmd_classify(cfg, k, parse_range(n_range), max_degree);
    if (*geometry) return cmd_geometry(cfg, n, k, sweep, parse_range(geo_range.empty() ? "2.." + std::to_string(std::max(n, 2)) : geo_range));
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
