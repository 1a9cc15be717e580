#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symbreak {

/// Unordered edge, stored with u < v.
using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// The edge set is deduplicated and kept in lexicographic order, so two
/// graphs are equal iff their serialized forms are equal. Edge indices used
/// elsewhere (colorings, subset search) are positions in this ordering.
class Graph {
 public:
  Graph() = default;
  Graph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  /// Position of edge {u,v} in the canonical edge ordering, -1 if absent.
  int edge_index(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool connected() const;
  /// BFS distances from src (-1 for unreachable vertices).
  std::vector<int> distances_from(int src) const;

  /// Relabels vertices: vertex v becomes perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

enum class ColorMode { vertex, edge, total };

std::string to_string(ColorMode mode);
ColorMode color_mode_from_string(const std::string& s);

/// A red/blue two-coloring of vertices and/or edges of a host graph.
/// Listed elements are red, everything else is blue.
struct TwoColoring {
  ColorMode mode = ColorMode::vertex;
  std::vector<int> red_vertices;
  std::vector<Edge> red_edges;

  /// Throws if the coloring does not live on `g` or violates its mode.
  void check_hosted(const Graph& g) const;
  /// Sorts and deduplicates the red sets; normalizes edge endpoint order.
  void normalize();
};

/// Builds a graph, rejecting loops and out-of-range endpoints by name.
/// Duplicate edges are collapsed.
Graph build_graph(int order, const std::vector<Edge>& edge_list);

enum class Family { path, cycle, complete, hypercube };

/// Standard families with conventional labelings. Hypercube vertices are
/// k-bit integers read most-significant-bit first as product coordinates.
Graph generate(Family family, int parameter);
Graph generate(const std::string& family, int parameter);

/// graph6 interchange format, bit-exact per the published format.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

/// Edge-list text format: first line is the order, then one "u v" per line.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

/// DOT output; red elements carry a color attribute, blue ones none.
std::string emit_dot(const Graph& g, const std::optional<TwoColoring>& coloring = {});

}  // namespace symbreak
