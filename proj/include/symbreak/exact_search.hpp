#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "symbreak/graph.hpp"
#include "symbreak/symmetry.hpp"

namespace symbreak {

/// Result of the minimum red-class search. `witness` is meaningful when
/// `found`; `refuted_below` certifies that every orbit representative of
/// every smaller red size was exhausted.
struct CostResult {
  std::string graph_spec;
  ColorMode mode = ColorMode::vertex;
  bool found = false;
  int value = -1;
  TwoColoring witness;
  bool refuted_below = false;
  int last_completed_size = 0;
  std::uint64_t checks = 0;
  bool budget_exhausted = false;
};

struct SearchBudget {
  std::uint64_t max_checks = UINT64_MAX;
  int workers = 1;
};

/// Smallest red class (size ascending, lexicographically minimal witness)
/// whose coloring is distinguishing. Scans orbit representatives under the
/// uncolored automorphism group; pass `group_hint` to reuse a known group
/// (e.g. the product group). max_size < 0 means half the element count.
/// min_size > 1 resumes from a checkpoint: sizes below it count as refuted.
CostResult exact_cost(const Graph& g, ColorMode mode, int max_size = -1,
                      const SearchBudget& budget = {}, const AutGroup* group_hint = nullptr,
                      const EngineOptions& opts = {}, int min_size = 1);

/// True iff the witness is hosted, has exactly `claimed` red elements and
/// is distinguishing.
bool verify_bound(const Graph& g, ColorMode mode, int claimed, const TwoColoring& witness);

/// Independent validity check of a distinguishing verdict: enumerates the
/// full uncolored group (order <= cap) and confirms that every non-identity
/// element moves the red class. Bypasses the search engine's pruning.
bool verify_witness_by_enumeration(const Graph& g, const TwoColoring& c,
                                   std::uint64_t cap = 1'000'000);

}  // namespace symbreak
