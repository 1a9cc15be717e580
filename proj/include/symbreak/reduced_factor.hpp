#pragma once

#include <utility>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/product.hpp"
#include "symbreak/symmetry.hpp"

namespace symbreak {

/// Factor i of a product, totally colored by certificates of the induced
/// quotient colorings: vertex j carries the certificate of its colored
/// quotient slice, edge e the certificate of its vertex-colored cross
/// quotient. Certificates are comparable across factors.
struct ReducedFactor {
  int factor_index = 0;
  Graph factor;
  std::vector<CanonicalCert> vertex_color;  // per factor vertex
  std::vector<CanonicalCert> edge_color;    // per canonical factor edge
};

/// The quotient slice with i-th coordinate fixed to j, carrying the vertex
/// and edge colors the base coloring induces on it.
ColoredGraph vertex_quotient_color(const ProductGraph& pg, const TwoColoring& f, int i, int j);

/// The vertex-colored quotient whose vertex x carries the color of the
/// product edge joining the two slices of factor edge e over position x.
ColoredGraph edge_quotient_color(const ProductGraph& pg, const TwoColoring& f, int i, Edge e);

ReducedFactor reduced_factor_coloring(const ProductGraph& pg, const TwoColoring& f, int i);

/// Verdict of the sufficient condition: every reduced factor distinguishing
/// and no two reduced factors equivalent. satisfied=true certifies that f is
/// a distinguishing coloring; satisfied=false is inconclusive.
struct AulVerdict {
  bool satisfied = false;
  std::vector<bool> per_factor_distinguishing;
  std::vector<std::pair<int, int>> equivalent_pairs;
};

AulVerdict aul_check(const ProductGraph& pg, const TwoColoring& f);

}  // namespace symbreak
