#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

/// Ordered catalog of asymmetric trees: omega lists one tree per isomorphism
/// class in non-decreasing order (certificate order within equal size), and
/// counts[n] is the number of asymmetric trees on n vertices.
struct TreeCatalog {
  int max_order = 0;
  std::vector<Graph> omega;
  std::vector<std::uint64_t> counts;  // index by order, 0 unused

  std::uint64_t count(int n) const { return n <= max_order ? counts[n] : 0; }
  /// Sum of i*a_i for i <= N.
  std::uint64_t vertex_sum(int N) const;
  /// Sum of a_i for i <= N.
  std::uint64_t count_sum(int N) const;
};

/// All free trees on n vertices, one per isomorphism class, in the
/// deterministic order of the level-sequence generator. 1 <= n <= 16.
std::vector<Graph> enumerate_trees(int n);

/// The asymmetric subset of enumerate_trees(n), filtered by the exact
/// automorphism engine.
std::vector<Graph> enumerate_asymmetric_trees(int n);

TreeCatalog build_catalog(int max_order);

/// Process-wide memoized catalog (trees are expensive to regenerate).
const TreeCatalog& shared_catalog(int max_order);

/// Decodes a Pruefer sequence over {0..n-1} of length n-2 into its labeled
/// tree (n >= 2). Used as an independent enumeration oracle.
Graph prufer_decode(const std::vector<int>& seq, int n);

/// Canonical form string of the underlying free tree (centroid-rooted AHU
/// encoding). Computed without the symmetry engine.
std::string free_tree_signature(const Graph& tree);

/// |Aut| of a free tree from its rooted decomposition (product of repeated
/// child-subtree multiplicities, times 2 for a symmetric bicentroid).
/// Independent of the symmetry engine.
std::uint64_t tree_automorphism_count(const Graph& tree);

}  // namespace symbreak
