#include "symbreak/exact_search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace symbreak {

namespace {

TwoColoring coloring_from_subset(const Graph& g, ColorMode mode, const std::vector<int>& subset) {
  TwoColoring col;
  col.mode = mode;
  if (mode == ColorMode::vertex) {
    col.red_vertices = subset;
  } else {
    for (int e : subset) col.red_edges.push_back(g.edges()[e]);
  }
  return col;
}

// Plain lexicographic subset stream for groups too large to enumerate.
bool plain_subsets(int universe, int m, const std::vector<int>& shard_filter,
                   const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> subset;
  std::function<bool(int)> rec = [&](int next) {
    if (static_cast<int>(subset.size()) == m) return visit(subset);
    for (int x = next; x <= universe - (m - static_cast<int>(subset.size())); ++x) {
      if (subset.empty() && !shard_filter.empty() &&
          !std::binary_search(shard_filter.begin(), shard_filter.end(), x))
        continue;
      subset.push_back(x);
      bool keep_going = rec(x + 1);
      subset.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace

CostResult exact_cost(const Graph& g, ColorMode mode, int max_size, const SearchBudget& budget,
                      const AutGroup* group_hint, const EngineOptions& opts, int min_size) {
  if (mode == ColorMode::total)
    throw std::invalid_argument("cost search runs in vertex or edge mode");
  if (min_size < 1) throw std::invalid_argument("min_size must be at least 1");
  CostResult result;
  result.mode = mode;
  int universe = mode == ColorMode::vertex ? g.order() : g.edge_count();
  if (max_size < 0) max_size = universe / 2;
  result.last_completed_size = min_size - 1;

  AutGroup local_group;
  const AutGroup* group = group_hint;
  if (!group) {
    local_group = automorphism_group(g, opts);
    group = &local_group;
  }
  std::optional<PermTable> action;
  if (group->order <= opts.enumeration_cap) {
    AutGroup with_elements = *group;
    ensure_elements(with_elements, opts.enumeration_cap);
    if (mode == ColorMode::vertex)
      action = std::move(*with_elements.elements);
    else
      action = edge_action(g, *with_elements.elements);
  }

  std::atomic<std::uint64_t> checks{0};
  int workers = std::max(1, budget.workers);

  for (int m = min_size; m <= max_size; ++m) {
    std::vector<std::vector<int>> hits(workers);
    std::atomic<bool> out_of_budget{false};
    auto scan_shard = [&](int shard) {
      std::vector<int> filter;
      if (workers > 1)
        for (int x = shard; x < universe; x += workers) filter.push_back(x);
      auto visit = [&](const std::vector<int>& subset) {
        if (checks.fetch_add(1) >= budget.max_checks) {
          out_of_budget = true;
          return false;
        }
        TwoColoring col = coloring_from_subset(g, mode, subset);
        if (is_distinguishing(g, col, opts)) {
          hits[shard] = subset;
          return false;  // shard stream is lex-ordered; first hit is its min
        }
        return true;
      };
      if (action)
        for_each_subset_orbit_rep(universe, m, *action, filter, visit);
      else
        plain_subsets(universe, m, filter, visit);
    };
    if (workers == 1) {
      scan_shard(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(scan_shard, w);
      for (auto& t : pool) t.join();
    }
    result.checks = checks.load();
    std::vector<int> best;
    for (const auto& hit : hits)
      if (!hit.empty() && (best.empty() || hit < best)) best = hit;
    if (out_of_budget) {
      result.budget_exhausted = true;
      return result;
    }
    if (!best.empty()) {
      result.found = true;
      result.value = m;
      result.witness = coloring_from_subset(g, mode, best);
      result.witness.normalize();
      result.refuted_below = true;  // all previous levels completed
      return result;
    }
    result.last_completed_size = m;
  }
  result.refuted_below = true;
  return result;
}

bool verify_bound(const Graph& g, ColorMode mode, int claimed, const TwoColoring& witness) {
  witness.check_hosted(g);
  if (witness.mode != mode) return false;
  int red = mode == ColorMode::vertex ? static_cast<int>(witness.red_vertices.size())
                                      : static_cast<int>(witness.red_edges.size());
  if (red != claimed) return false;
  return is_distinguishing(g, witness);
}

bool verify_witness_by_enumeration(const Graph& g, const TwoColoring& c, std::uint64_t cap) {
  c.check_hosted(g);
  AutGroup group = automorphism_group(g);
  if (group.order > cap)
    throw std::invalid_argument("group too large for enumeration-based verification");
  ensure_elements(group, cap);
  const PermTable& elements = *group.elements;
  std::vector<char> red_v(g.order(), 0);
  std::vector<char> red_e(g.edge_count(), 0);
  if (c.mode != ColorMode::edge)
    for (int v : c.red_vertices) red_v[v] = 1;
  if (c.mode != ColorMode::vertex)
    for (const auto& [u, v] : c.red_edges) red_e[g.edge_index(u, v)] = 1;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const int* p = elements[i];
    bool identity = true;
    for (int v = 0; v < g.order(); ++v)
      if (p[v] != v) {
        identity = false;
        break;
      }
    if (identity) continue;
    bool preserves = true;
    for (int v = 0; v < g.order() && preserves; ++v)
      if (red_v[v] != red_v[p[v]]) preserves = false;
    for (int e = 0; e < g.edge_count() && preserves; ++e) {
      auto [u, v] = g.edges()[e];
      if (red_e[e] != red_e[g.edge_index(p[u], p[v])]) preserves = false;
    }
    if (preserves) return false;  // a non-identity element fixes the classes
  }
  return true;
}

}  // namespace symbreak
