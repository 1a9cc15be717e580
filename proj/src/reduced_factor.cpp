#include "symbreak/reduced_factor.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace symbreak {

namespace {

struct LiftedColoring {
  std::set<int> red_vertices;
  std::set<Edge> red_edges;
};

// Vertex or edge colorings are lifted to total form with blank fill.
LiftedColoring lift(const ProductGraph& pg, const TwoColoring& f) {
  f.check_hosted(pg.graph);
  LiftedColoring lifted;
  if (f.mode != ColorMode::edge)
    lifted.red_vertices.insert(f.red_vertices.begin(), f.red_vertices.end());
  if (f.mode != ColorMode::vertex)
    for (auto e : f.red_edges) lifted.red_edges.insert(e);
  return lifted;
}

void check_factor_index(const ProductGraph& pg, int i) {
  if (i < 0 || i >= pg.factor_count()) throw std::invalid_argument("factor index out of range");
  if (pg.factor_count() < 2)
    throw std::invalid_argument("quotient colorings need a product with at least two factors");
}

}  // namespace

ColoredGraph vertex_quotient_color(const ProductGraph& pg, const TwoColoring& f, int i, int j) {
  check_factor_index(pg, i);
  if (j < 0 || j >= pg.factors[i].order()) throw std::invalid_argument("slice position out of range");
  LiftedColoring lifted = lift(pg, f);
  ProductGraph q = quotient(pg, i);
  ColoredGraph out(q.graph);
  for (int x = 0; x < q.graph.order(); ++x) {
    int v = quotient_vertex_in_product(pg, i, j, x);
    if (lifted.red_vertices.count(v)) out.vertex_color[x] = 1;
  }
  for (int e = 0; e < q.graph.edge_count(); ++e) {
    auto [x, y] = q.graph.edges()[e];
    int u = quotient_vertex_in_product(pg, i, j, x);
    int v = quotient_vertex_in_product(pg, i, j, y);
    Edge pe = u < v ? Edge{u, v} : Edge{v, u};
    if (lifted.red_edges.count(pe)) out.edge_color[e] = 1;
  }
  return out;
}

ColoredGraph edge_quotient_color(const ProductGraph& pg, const TwoColoring& f, int i, Edge e) {
  check_factor_index(pg, i);
  if (!pg.factors[i].has_edge(e.first, e.second))
    throw std::invalid_argument("edge not in factor");
  LiftedColoring lifted = lift(pg, f);
  ProductGraph q = quotient(pg, i);
  ColoredGraph out(q.graph);
  for (int x = 0; x < q.graph.order(); ++x) {
    int u = quotient_vertex_in_product(pg, i, e.first, x);
    int v = quotient_vertex_in_product(pg, i, e.second, x);
    Edge pe = u < v ? Edge{u, v} : Edge{v, u};
    if (lifted.red_edges.count(pe)) out.vertex_color[x] = 1;
  }
  return out;
}

ReducedFactor reduced_factor_coloring(const ProductGraph& pg, const TwoColoring& f, int i) {
  check_factor_index(pg, i);
  ReducedFactor rf;
  rf.factor_index = i;
  rf.factor = pg.factors[i];
  for (int j = 0; j < rf.factor.order(); ++j)
    rf.vertex_color.push_back(canonical_certificate(vertex_quotient_color(pg, f, i, j)));
  for (const auto& e : rf.factor.edges())
    rf.edge_color.push_back(canonical_certificate(edge_quotient_color(pg, f, i, e)));
  return rf;
}

AulVerdict aul_check(const ProductGraph& pg, const TwoColoring& f) {
  if (pg.factor_count() < 2)
    throw std::invalid_argument("the sufficient condition applies to products of >= 2 factors");
  AulVerdict verdict;

  // Shared certificate dictionary so colors are comparable across factors.
  std::map<std::vector<std::uint8_t>, int> palette;
  auto color_id = [&palette](const CanonicalCert& cert) {
    auto [it, fresh] = palette.emplace(cert.bytes, static_cast<int>(palette.size()) + 1);
    return it->second;
  };

  std::vector<ColoredGraph> colored_factors;
  for (int i = 0; i < pg.factor_count(); ++i) {
    ReducedFactor rf = reduced_factor_coloring(pg, f, i);
    ColoredGraph cg(rf.factor);
    for (int j = 0; j < rf.factor.order(); ++j) cg.vertex_color[j] = color_id(rf.vertex_color[j]);
    for (int e = 0; e < rf.factor.edge_count(); ++e) cg.edge_color[e] = color_id(rf.edge_color[e]);
    colored_factors.push_back(std::move(cg));
  }

  verdict.satisfied = true;
  for (const auto& cg : colored_factors) {
    bool distinguishing = automorphism_group(cg).order == 1;
    verdict.per_factor_distinguishing.push_back(distinguishing);
    if (!distinguishing) verdict.satisfied = false;
  }
  for (int i = 0; i < pg.factor_count(); ++i)
    for (int j = i + 1; j < pg.factor_count(); ++j)
      if (are_color_isomorphic(colored_factors[i], colored_factors[j])) {
        verdict.equivalent_pairs.emplace_back(i, j);
        verdict.satisfied = false;
      }
  return verdict;
}

}  // namespace symbreak
