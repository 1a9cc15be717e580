#pragma once

#include <string>

#include "json.hpp"
#include "symbreak/constructions.hpp"
#include "symbreak/exact_search.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/kn_cost.hpp"
#include "symbreak/reduced_factor.hpp"
#include "symbreak/trees.hpp"

namespace symbreak {

using json = nlohmann::json;

inline json edges_to_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const auto& [u, v] : edges) arr.push_back(json::array({u, v}));
  return arr;
}

inline json coloring_to_json(const TwoColoring& c) {
  return json{{"mode", to_string(c.mode)},
              {"red_vertices", c.red_vertices},
              {"red_edges", edges_to_json(c.red_edges)}};
}

inline TwoColoring coloring_from_json(const json& j) {
  TwoColoring c;
  c.mode = color_mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("red_vertices")) c.red_vertices = j["red_vertices"].get<std::vector<int>>();
  if (j.contains("red_edges"))
    for (const auto& e : j["red_edges"]) c.red_edges.push_back({e.at(0), e.at(1)});
  c.normalize();
  return c;
}

inline json construction_to_json(const Construction& c) {
  json j = coloring_to_json(c.coloring);
  j["graph_spec"] = c.graph_spec;
  j["verified"] = c.verified;
  return j;
}

inline json cost_result_to_json(const CostResult& r) {
  json j{{"graph_spec", r.graph_spec},
         {"mode", to_string(r.mode)},
         {"found", r.found},
         {"refuted_below", r.refuted_below},
         {"last_completed_size", r.last_completed_size},
         {"checks", r.checks},
         {"budget_exhausted", r.budget_exhausted}};
  if (r.found) {
    j["value"] = r.value;
    j["witness"] = coloring_to_json(r.witness);
  }
  return j;
}

inline json verdict_to_json(const AulVerdict& v) {
  json factors = json::array();
  for (std::size_t i = 0; i < v.per_factor_distinguishing.size(); ++i)
    factors.push_back(
        json{{"index", i}, {"distinguishing", static_cast<bool>(v.per_factor_distinguishing[i])}});
  json pairs = json::array();
  for (const auto& [a, b] : v.equivalent_pairs) pairs.push_back(json::array({a, b}));
  return json{{"satisfied", v.satisfied}, {"factors", factors}, {"equivalent_pairs", pairs}};
}

inline json catalog_to_json(const TreeCatalog& cat) {
  json trees = json::array();
  for (const auto& t : cat.omega)
    trees.push_back(json{{"order", t.order()}, {"graph6", emit_graph6(t)}});
  json counts = json::object();
  for (int n = 1; n <= cat.max_order; ++n) counts[std::to_string(n)] = cat.counts[n];
  return json{{"max_order", cat.max_order}, {"counts", counts}, {"trees", trees}};
}

inline json forest_to_json(const ForestCover& f) {
  json comps = json::array();
  for (const auto& [tree, block] : f.components)
    comps.push_back(json{{"order", tree.order()}, {"graph6", emit_graph6(tree)}, {"block", block}});
  return json{{"n", f.n}, {"components", comps}, {"red_edges", edges_to_json(f.red_edges)}};
}

inline json quintas_to_json(const QuintasParams& q) {
  return json{{"n", q.n}, {"N", q.N}, {"w", q.w}, {"r", q.r}};
}

inline std::string cert_hex(const CanonicalCert& cert) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(cert.bytes.size() * 2);
  for (auto b : cert.bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

inline json permutation_to_json(const Permutation& p) { return json(p.images); }

}  // namespace symbreak
