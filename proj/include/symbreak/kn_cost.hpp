#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/trees.hpp"

namespace symbreak {

/// Parameters of the partial-sum decomposition over the asymmetric-tree
/// counts: sum_{i<=N} i*a_i <= n < sum_{i<=N+1} i*a_i and
/// n = sum_{i<=N} i*a_i + w(N+1) + r with 0 <= w < a_{N+1}, 0 <= r < N+1.
struct QuintasParams {
  int n = 0;
  int N = 0;
  int w = 0;
  int r = 0;
};

QuintasParams quintas_params(int n, const TreeCatalog& cat);

/// Edge-distinguishing cost of the complete graph K_n (n >= 6).
int rho_prime_kn(int n, const TreeCatalog& cat);

/// Spanning asymmetric red forest of K_n: pairwise non-isomorphic asymmetric
/// trees covering all n vertices, with the component count maximized.
struct ForestCover {
  int n = 0;
  /// (tree, host-vertex block); blocks partition {0..n-1}.
  std::vector<std::pair<Graph, std::vector<int>>> components;
  std::vector<Edge> red_edges;
};

ForestCover procedure1(int n, const TreeCatalog& cat);

struct KnTableRow {
  int n = 0;
  int rho = 0;
};

std::vector<KnTableRow> kn_table(int lo, int hi, const TreeCatalog& cat, int workers = 1);

/// Run-length compression of a table: maximal runs that are either constant
/// or follow n - offset.
struct RunLengthRow {
  int lo = 0;
  int hi = 0;
  bool constant = false;
  int value = 0;   // the constant, when constant
  int offset = 0;  // rho = n - offset, otherwise
};

std::vector<RunLengthRow> run_length_rows(const std::vector<KnTableRow>& rows);
std::string render_run_length(const std::vector<RunLengthRow>& rows);
std::string render_csv(const std::vector<KnTableRow>& rows);

/// Minimum edge count over asymmetric graphs on exactly n vertices
/// (isolated vertices allowed), by isomorph-free exhaustive enumeration.
/// Supported for 6 <= n <= 9.
int min_asymmetric_edge_count(int n);

/// Red-edge witness coloring of K_n achieving rho_prime_kn(n): the known
/// six-edge graphs for n in {6,7}, the procedure forest for n >= 8.
TwoColoring kn_edge_witness(int n, const TreeCatalog& cat);

}  // namespace symbreak
