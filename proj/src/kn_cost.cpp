#include "symbreak/kn_cost.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "symbreak/symmetry.hpp"

namespace symbreak {

QuintasParams quintas_params(int n, const TreeCatalog& cat) {
  if (n < 8) throw std::invalid_argument("partial-sum parameters are defined for n >= 8");
  int depth = cat.max_order;
  int N = 0;
  for (int i = 1; i <= depth; ++i)
    if (cat.vertex_sum(i) <= static_cast<std::uint64_t>(n)) N = i;
  std::uint64_t used = cat.vertex_sum(N);
  if (N < depth) {
    // The bracket n < vertex_sum(N+1) holds by maximality of N.
  } else {
    // a_{N+1} is not in the catalog; the counts are non-decreasing from
    // order 7 on, so a_{N+1} >= a_N bounds the next partial sum from below.
    std::uint64_t next_lb = used + static_cast<std::uint64_t>(N + 1) * cat.count(N);
    if (static_cast<std::uint64_t>(n) >= next_lb)
      throw std::invalid_argument("catalog too shallow for n=" + std::to_string(n) +
                                  ": need asymmetric trees up to order " + std::to_string(N + 1));
  }
  QuintasParams p;
  p.n = n;
  p.N = N;
  p.w = static_cast<int>((n - used) / (N + 1));
  p.r = static_cast<int>((n - used) % (N + 1));
  std::uint64_t a_next = N + 1 <= depth ? cat.count(N + 1) : cat.count(N);
  if (static_cast<std::uint64_t>(p.w) >= a_next)
    throw std::invalid_argument("catalog too shallow for n=" + std::to_string(n) +
                                ": need the count of asymmetric trees of order " +
                                std::to_string(N + 1));
  return p;
}

int rho_prime_kn(int n, const TreeCatalog& cat) {
  if (n < 6)
    throw std::invalid_argument("edge cost of K_n requires n >= 6 (more than two colors below)");
  if (n <= 7) return 6;
  QuintasParams p = quintas_params(n, cat);
  return n - static_cast<int>(cat.count_sum(p.N)) - p.w;
}

namespace {

// Lexicographically first selection (in omega order) of `want` distinct
// catalog trees whose orders sum to `target`.
bool pick_components(const std::vector<int>& sizes, const std::vector<std::uint64_t>& prefix,
                     int idx, int want, long long target, std::vector<int>& chosen) {
  if (want == 0) return target == 0;
  int total = static_cast<int>(sizes.size());
  if (idx + want > total) return false;
  // Bounds: the `want` smallest available start at idx; the largest end the list.
  long long min_sum = static_cast<long long>(prefix[idx + want] - prefix[idx]);
  long long max_sum = static_cast<long long>(prefix[total] - prefix[total - want]);
  if (target < min_sum || target > max_sum) return false;
  chosen.push_back(idx);
  if (pick_components(sizes, prefix, idx + 1, want - 1, target - sizes[idx], chosen)) return true;
  chosen.pop_back();
  return pick_components(sizes, prefix, idx + 1, want, target, chosen);
}

}  // namespace

ForestCover procedure1(int n, const TreeCatalog& cat) {
  if (n < 8) throw std::invalid_argument("the forest procedure is stated for n >= 8");
  QuintasParams p = quintas_params(n, cat);
  int components = static_cast<int>(cat.count_sum(p.N)) + p.w;

  std::vector<int> sizes;
  sizes.reserve(cat.omega.size());
  for (const auto& t : cat.omega) sizes.push_back(t.order());
  std::vector<std::uint64_t> prefix(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) prefix[i + 1] = prefix[i] + sizes[i];

  std::vector<int> chosen;
  if (!pick_components(sizes, prefix, 0, components, n, chosen)) {
    // No replacement combination of catalog trees fits the residue.
    int residue = static_cast<int>(n - cat.vertex_sum(p.N)) - p.w * (p.N + 1);
    throw std::invalid_argument("no exact-fit replacement trees in the catalog for n=" +
                                std::to_string(n) + " (residue " + std::to_string(residue) +
                                "); extend the catalog depth");
  }

  ForestCover cover;
  cover.n = n;
  int next_vertex = 0;
  for (int idx : chosen) {
    const Graph& tree = cat.omega[idx];
    std::vector<int> block(tree.order());
    std::iota(block.begin(), block.end(), next_vertex);
    next_vertex += tree.order();
    for (const auto& [u, v] : tree.edges()) cover.red_edges.push_back({block[u], block[v]});
    cover.components.emplace_back(tree, std::move(block));
  }
  std::sort(cover.red_edges.begin(), cover.red_edges.end());
  if (next_vertex != n || static_cast<int>(cover.red_edges.size()) != n - components)
    throw std::logic_error("forest cover bookkeeping failed");
  return cover;
}

std::vector<KnTableRow> kn_table(int lo, int hi, const TreeCatalog& cat, int workers) {
  if (lo < 6 || lo > hi) throw std::invalid_argument("table range must satisfy 6 <= lo <= hi");
  std::vector<KnTableRow> rows(hi - lo + 1);
  workers = std::max(1, workers);
  auto fill = [&](int shard) {
    for (int i = shard; i < static_cast<int>(rows.size()); i += workers)
      rows[i] = {lo + i, rho_prime_kn(lo + i, cat)};
  };
  if (workers == 1) {
    fill(0);
  } else {
    std::vector<std::thread> pool;
    for (int wkr = 0; wkr < workers; ++wkr) pool.emplace_back(fill, wkr);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::vector<RunLengthRow> run_length_rows(const std::vector<KnTableRow>& rows) {
  // Maximal runs of constant offset rho = n - k; consecutive one-element
  // runs with equal rho then collapse into constant rows.
  std::vector<RunLengthRow> offset_runs;
  std::size_t i = 0;
  while (i < rows.size()) {
    RunLengthRow row;
    row.lo = rows[i].n;
    row.offset = rows[i].n - rows[i].rho;
    row.value = rows[i].rho;
    while (i + 1 < rows.size() && rows[i + 1].n - rows[i + 1].rho == row.offset) ++i;
    row.hi = rows[i].n;
    ++i;
    offset_runs.push_back(row);
  }
  std::vector<RunLengthRow> out;
  for (std::size_t k = 0; k < offset_runs.size();) {
    if (offset_runs[k].lo == offset_runs[k].hi && k + 1 < offset_runs.size() &&
        offset_runs[k + 1].lo == offset_runs[k + 1].hi &&
        offset_runs[k + 1].value == offset_runs[k].value) {
      RunLengthRow row;
      row.constant = true;
      row.value = offset_runs[k].value;
      row.lo = offset_runs[k].lo;
      while (k + 1 < offset_runs.size() && offset_runs[k + 1].lo == offset_runs[k + 1].hi &&
             offset_runs[k + 1].value == row.value)
        ++k;
      row.hi = offset_runs[k].lo;
      ++k;
      out.push_back(row);
    } else {
      out.push_back(offset_runs[k]);
      ++k;
    }
  }
  return out;
}

std::string render_run_length(const std::vector<RunLengthRow>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << row.lo << "<=n<=" << row.hi << " | ";
    if (row.constant)
      out << row.value;
    else
      out << "n-" << row.offset;
    out << "\n";
  }
  return out.str();
}

std::string render_csv(const std::vector<KnTableRow>& rows) {
  std::ostringstream out;
  out << "n,rho_prime\n";
  for (const auto& row : rows) out << row.n << "," << row.rho << "\n";
  return out.str();
}

namespace {

std::vector<std::vector<int>> pair_orbits(const Graph& g, const AutGroup& group) {
  int n = g.order();
  auto pair_index = [n](int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n + v;
  };
  std::vector<int> parent(n * n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : group.generators)
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int a = find(pair_index(u, v));
        int b = find(pair_index(gen.images[u], gen.images[v]));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::map<int, std::vector<int>> buckets;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) buckets[find(pair_index(u, v))].push_back(pair_index(u, v));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : buckets) out.push_back(std::move(members));
  return out;
}

}  // namespace

int min_asymmetric_edge_count(int n) {
  if (n < 6 || n > 9)
    throw std::invalid_argument("exhaustive asymmetric-minimum supported for 6 <= n <= 9 only");
  // Isomorph-free edge augmentation: reps[m] holds one graph per class with
  // m edges on exactly n vertices.
  std::vector<Graph> reps = {Graph(n, {})};
  for (int m = 0;; ++m) {
    for (const auto& g : reps)
      if (automorphism_group(g).order == 1) return m;
    std::map<std::vector<std::uint8_t>, Graph> next;
    for (const auto& g : reps) {
      AutGroup group = automorphism_group(g);
      for (const auto& orbit : pair_orbits(g, group)) {
        int u = orbit.front() / n, v = orbit.front() % n;
        if (g.has_edge(u, v)) continue;
        auto edges = g.edges();
        edges.push_back({u, v});
        Graph extended(n, std::move(edges));
        auto cert = canonical_certificate(extended);
        next.emplace(std::move(cert.bytes), std::move(extended));
      }
    }
    reps.clear();
    for (auto& [cert, g] : next) reps.push_back(std::move(g));
    if (reps.empty()) throw std::logic_error("edge augmentation exhausted unexpectedly");
  }
}

TwoColoring kn_edge_witness(int n, const TreeCatalog& cat) {
  TwoColoring col;
  col.mode = ColorMode::edge;
  if (n == 6) {
    col.red_edges = {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {4, 5}};
  } else if (n == 7) {
    col.red_edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}};
  } else {
    col.red_edges = procedure1(n, cat).red_edges;
  }
  col.normalize();
  return col;
}

}  // namespace symbreak
