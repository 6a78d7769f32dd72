#pragma once

// JSON and text exports for graphs, sign vectors, complexes and reports.

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "sgk/charclasses.hpp"
#include "sgk/complexes.hpp"
#include "sgk/graphs.hpp"
#include "sgk/matroid.hpp"

namespace sgk {

using json = nlohmann::ordered_json;

/// {m, n, k, vertices: [[members]], edges: [[i, j]]}
inline json graph_to_json(const Graph& g) {
  json j;
  if (g.params()) {
    j["m"] = g.params()->m();
    j["n"] = g.params()->n;
    j["k"] = g.params()->k;
  }
  json verts = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) verts.push_back(g.has_labels() ? json(g.label(v).members()) : json(v));
  j["vertices"] = std::move(verts);
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

inline Graph graph_from_json(const json& j) {
  const auto& verts = j.at("vertices");
  Graph g(static_cast<int>(verts.size()));
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  if (j.contains("m") && !verts.empty() && verts[0].is_array()) {
    const int m = j.at("m").get<int>();
    std::vector<CircularSet> labels;
    for (const auto& v : verts) labels.push_back(CircularSet::from_members(m, v.get<std::vector<int>>()));
    g.set_labels(std::move(labels));
    g.set_params({j.at("n").get<int>(), j.at("k").get<int>()});
  }
  return g;
}

/// DIMACS edge format, 1-based vertices.
inline std::string graph_to_dimacs(const Graph& g) {
  std::ostringstream os;
  if (g.params()) os << "c SG n=" << g.params()->n << " k=" << g.params()->k << "\n";
  const auto edges = g.edges();
  os << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  return os.str();
}

inline json covectors_to_json(int m, int k, const std::vector<SignVector>& covectors) {
  json list = json::array();
  for (const auto& s : covectors) list.push_back(s.to_string());
  return {{"m", m}, {"k", k}, {"count", covectors.size()}, {"covectors", std::move(list)}};
}

inline json complex_to_json(const SimplicialComplex& X) {
  return {{"vertex_count", X.vertex_count}, {"dimension", X.dimension()}, {"facets", X.facets}};
}

inline json window_to_json(const std::optional<Window>& w) {
  if (!w) return nullptr;
  return {{"lo", w->lo}, {"hi", w->hi}, {"rule", w->rule}};
}

inline json classification_to_json(const ClassificationReport& r) {
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["m"] = r.m;
  j["ring_case"] = to_string(r.ring);
  j["max_degree"] = r.max_degree;
  j["w"] = r.w;
  j["wbar_vanishing_degrees"] = r.vanishing;
  j["window"] = window_to_json(r.window);
  j["verdict"] = to_string(r.verdict);
  j["certificate"] = r.certificate;
  j["caveats"] = r.caveats;
  return j;
}

inline json realization_to_json(const RealizationReport& r) {
  return {{"m", r.m},
          {"k", r.k},
          {"samples", r.samples},
          {"non_covector_samples", r.non_covector_samples},
          {"topes_expected", r.topes_expected},
          {"topes_sampled", r.topes_sampled},
          {"topes_constructed", r.topes_constructed},
          {"spurious_topes", r.spurious_topes},
          {"cocircuits", r.cocircuits},
          {"cocircuits_realized", r.cocircuits_realized},
          {"failures", r.failures},
          {"pass", r.pass()}};
}

}  // namespace sgk
