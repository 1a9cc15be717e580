#pragma once

#include <string>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/kn_cost.hpp"
#include "symbreak/product.hpp"

namespace symbreak {

/// A coloring constructor output. Every constructor verifies its coloring
/// with the exact distinguishing check before returning; an unverified
/// coloring is never handed out.
struct Construction {
  std::string graph_spec;
  ProductGraph product;
  TwoColoring coloring;
  bool verified = false;
};

/// One red element on the k-th Cartesian power of the path P_n.
/// Edge mode needs k <= 1 + n/2, vertex mode k <= n/2.
Construction path_power_coloring(int n, int k, ColorMode mode);

/// One red element on a product of paths with pairwise distinct orders >= 3.
Construction path_product_coloring(const std::vector<int>& orders, ColorMode mode);

/// Two red edges (edge mode) or three red vertices (vertex mode) on the
/// k-th power of the cycle C_n, n >= 5, k >= 2.
Construction cycle_power_coloring(int n, int k, ColorMode mode);

/// Same red patterns on a product of cycles with distinct orders >= 5.
Construction cycle_product_coloring(const std::vector<int>& orders, ColorMode mode);

/// The fixed three-red-edge colorings of Q_3 and Q_4.
Construction small_hypercube_coloring(int k);

/// Red edge bundle over a determining set of Q_n (n >= 5): vertex v_i of the
/// set receives i+1 red edges, giving (ceil(log2 n)+4)(ceil(log2 n)+1)/2 in
/// total.
Construction hypercube_det_coloring(int n);

/// Two red edges per vertex of a distinguishing class of size
/// 2 ceil(log2 n) - 1 in Q_n, giving 4 ceil(log2 n) - 2 red edges.
Construction hypercube_class_coloring(int n);

/// Embeds the red witness of K_n into k layers of K_n^k, one per factor,
/// anchored along the first coordinate. k <= n+1 and n^k <= 2000.
Construction kn_power_coloring(int n, int k, const TreeCatalog& cat);

}  // namespace symbreak
