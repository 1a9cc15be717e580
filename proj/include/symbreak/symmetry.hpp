#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

/// Thrown when a search exceeds its node budget. Results are never
/// silently truncated.
struct budget_exhausted : std::runtime_error {
  explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Permutation of 0..n-1; images[v] is the image of v.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  bool is_identity() const;
  Permutation inverse() const;
  /// Composition "this first, then other".
  Permutation then(const Permutation& other) const;
  int operator()(int v) const { return images[v]; }
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Flat table of permutations of a common degree.
class PermTable {
 public:
  PermTable() = default;
  explicit PermTable(int degree) : degree_(degree) {}
  int degree() const { return degree_; }
  std::size_t size() const { return degree_ ? flat_.size() / degree_ : 0; }
  void push(const Permutation& p);
  const int* operator[](std::size_t i) const { return flat_.data() + i * degree_; }

 private:
  int degree_ = 0;
  std::vector<int> flat_;
};

/// Automorphism group given by generators, with its exact order.
/// `elements` is filled by enumerate_elements when the order fits the cap.
struct AutGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  std::optional<PermTable> elements;
};

/// Vertex- and edge-colored graph. Color maps are total; id 0 is the
/// reserved blank color. Edge colors are indexed by canonical edge position.
struct ColoredGraph {
  Graph graph;
  std::vector<int> vertex_color;
  std::vector<int> edge_color;

  explicit ColoredGraph(Graph g);
  ColoredGraph(Graph g, std::vector<int> vcolor, std::vector<int> ecolor);
  bool has_edge_colors() const;
};

/// Builds the colored view of (g, c) that the distinguishing check uses:
/// red elements get color 1, everything else blank. Modes restrict which
/// classes are carried.
ColoredGraph colored_view(const Graph& g, const TwoColoring& c);

/// Relabeling-invariant certificate; equal iff the colored graphs admit a
/// color-preserving isomorphism.
struct CanonicalCert {
  std::vector<std::uint8_t> bytes;
  friend bool operator==(const CanonicalCert&, const CanonicalCert&) = default;
  friend auto operator<=>(const CanonicalCert&, const CanonicalCert&) = default;
};

struct EngineOptions {
  /// Search-tree node budget before budget_exhausted is thrown.
  std::uint64_t node_budget = 50'000'000;
  /// Full element enumeration is attempted when the group order is at most
  /// this cap.
  std::uint64_t enumeration_cap = 1'000'000;
};

/// Full group of color- and adjacency-preserving permutations.
AutGroup automorphism_group(const ColoredGraph& cg, const EngineOptions& opts = {});
AutGroup automorphism_group(const Graph& g, const EngineOptions& opts = {});

CanonicalCert canonical_certificate(const ColoredGraph& cg, const EngineOptions& opts = {});
CanonicalCert canonical_certificate(const Graph& g, const EngineOptions& opts = {});

/// Witness mapping a -> b when one exists.
std::optional<Permutation> are_color_isomorphic(const ColoredGraph& a, const ColoredGraph& b,
                                                const EngineOptions& opts = {});
std::optional<Permutation> are_isomorphic(const Graph& a, const Graph& b,
                                          const EngineOptions& opts = {});

/// True iff no automorphism except the identity preserves the coloring.
bool is_distinguishing(const Graph& g, const TwoColoring& c, const EngineOptions& opts = {});

/// True iff the pointwise stabilizer of s is trivial.
bool is_determining_set(const Graph& g, const std::vector<int>& s,
                        const EngineOptions& opts = {});

/// Minimum-cardinality determining set (lex-least witness). With a distance
/// floor, minimum among sets with pairwise distance >= floor.
std::vector<int> min_determining_set(const Graph& g, std::optional<int> distance_floor = {},
                                     const EngineOptions& opts = {});

/// Expands generators into the full element table (throws if order > cap).
PermTable enumerate_elements(const AutGroup& group, std::uint64_t cap);
/// Fills group.elements when the order fits the cap.
void ensure_elements(AutGroup& group, std::uint64_t cap);

/// Group order from generators by orbit-stabilizer counting.
std::uint64_t group_order(int degree, const std::vector<Permutation>& generators);

/// Orbit partition of the vertices under the group.
std::vector<std::vector<int>> vertex_orbits(const Graph& g, const AutGroup& group);
/// Orbit partition of the canonical edge list under the group.
std::vector<std::vector<int>> edge_orbits(const Graph& g, const AutGroup& group);

/// Streams the lexicographically minimal representative of every orbit of
/// m-subsets of {0..universe-1} under the element table acting by `action`
/// (action[e][x] is the image of point x under element e). Stops early when
/// the visitor returns false. Returns false if stopped early.
bool for_each_subset_orbit_rep(int universe, int m, const PermTable& action,
                               const std::vector<int>& shard_filter,
                               const std::function<bool(const std::vector<int>&)>& visit);

/// Orbit size of a subset under the element table (orbit-stabilizer).
std::uint64_t subset_orbit_size(const std::vector<int>& subset, const PermTable& action);

/// Element table for the induced action on the canonical edge list.
PermTable edge_action(const Graph& g, const PermTable& elements);

}  // namespace symbreak
