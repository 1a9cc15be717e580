#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/symmetry.hpp"

namespace symbreak {

/// Cartesian product with row-major mixed-radix coordinates: vertex index
/// v decomposes as coords with coords[0] the most significant digit.
struct ProductGraph {
  Graph graph;
  std::vector<Graph> factors;
  std::vector<int> strides;

  int factor_count() const { return static_cast<int>(factors.size()); }
  std::vector<int> coords(int v) const;
  int coord(int v, int i) const { return (v / strides[i]) % factors[i].order(); }
  int vertex_at(const std::vector<int>& coords) const;
  /// The vertex obtained from v by setting coordinate i to j.
  int with_coord(int v, int i, int j) const;
};

/// Builds the product. Factors must be connected with order >= 2; factors of
/// order <= 8 are checked prime, larger ones are trusted.
ProductGraph cartesian_product(const std::vector<Graph>& factors);

/// The factor-i layer through v: a copy of factor i plus the embedding map
/// sending factor vertex j to the corresponding product vertex.
std::pair<Graph, std::vector<int>> layer(const ProductGraph& pg, int i, int v);

/// The product of all factors except i (k >= 2), with its own coordinates.
ProductGraph quotient(const ProductGraph& pg, int i);
/// Embedding of quotient vertex x into pg with coordinate i set to j.
int quotient_vertex_in_product(const ProductGraph& pg, int i, int j, int x);

/// Prime factor decomposition by the chordless-square edge relation,
/// verified by an isomorphism witness against the rebuilt product. Returns
/// {g} and sets *prime_within_scope when no decomposition is found.
std::vector<Graph> factorize(const Graph& g, bool* prime_within_scope = nullptr);

/// Automorphism group assembled from factor automorphisms and swaps of
/// isomorphic factors; the order is cross-checked by orbit-stabilizer
/// counting over the lifted generators.
AutGroup product_automorphism_group(const ProductGraph& pg);

/// Graph spec grammar: factor := (P|C|K)<int> | Q<int>;
/// term := factor['^'int]; product := term('*'term)*.
struct ParsedSpec {
  std::string text;
  std::vector<Graph> factors;  // expanded (powers unrolled, Qk -> k copies of K2)
  Graph graph;                 // the spec graph (product when factors > 1)
  bool is_product = false;     // at least two factors
};

ParsedSpec parse_graph_spec(const std::string& spec);

/// ProductGraph for a spec with >= 2 factors (or a 1-factor wrapper).
ProductGraph product_from_spec(const std::string& spec);

}  // namespace symbreak
