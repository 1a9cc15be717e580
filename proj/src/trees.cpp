#include "symbreak/trees.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "symbreak/symmetry.hpp"

namespace symbreak {

std::uint64_t TreeCatalog::vertex_sum(int N) const {
  std::uint64_t s = 0;
  for (int i = 1; i <= N && i <= max_order; ++i) s += static_cast<std::uint64_t>(i) * counts[i];
  return s;
}

std::uint64_t TreeCatalog::count_sum(int N) const {
  std::uint64_t s = 0;
  for (int i = 1; i <= N && i <= max_order; ++i) s += counts[i];
  return s;
}

namespace {

// Beyer-Hedetniemi successor generation of canonical rooted-tree level
// sequences, root at level 1, in decreasing lexicographic order.
class LevelSequences {
 public:
  explicit LevelSequences(int n) : n_(n), levels_(n) {
    for (int i = 0; i < n; ++i) levels_[i] = i + 1;
    fresh_ = true;
  }

  const std::vector<int>* next() {
    if (fresh_) {
      fresh_ = false;
      return &levels_;
    }
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i)
      if (levels_[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) return nullptr;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (levels_[i] == levels_[p] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
    return &levels_;
  }

 private:
  int n_;
  std::vector<int> levels_;
  bool fresh_;
};

Graph tree_from_levels(const std::vector<int>& levels) {
  int n = static_cast<int>(levels.size());
  std::vector<Edge> es;
  es.reserve(n - 1);
  std::vector<int> last_at_level(n + 2, -1);
  for (int i = 0; i < n; ++i) {
    if (levels[i] > 1) es.push_back({last_at_level[levels[i] - 1], i});
    last_at_level[levels[i]] = i;
  }
  return Graph(n, std::move(es));
}

struct RootedCode {
  std::string enc;
  std::uint64_t aut;
};

RootedCode rooted_code(const Graph& t, int v, int parent) {
  std::vector<RootedCode> kids;
  for (int w : t.neighbors(v))
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end(),
            [](const RootedCode& a, const RootedCode& b) { return a.enc < b.enc; });
  std::uint64_t aut = 1;
  std::string enc = "(";
  std::uint64_t run = 1;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    aut *= kids[i].aut;
    if (i > 0 && kids[i].enc == kids[i - 1].enc) {
      ++run;
      aut *= run;  // accumulates run! across the repeated block
    } else {
      run = 1;
    }
    enc += kids[i].enc;
  }
  enc += ")";
  return {std::move(enc), aut};
}

std::vector<int> centroids(const Graph& t) {
  int n = t.order();
  if (n == 1) return {0};
  std::vector<int> degree(n), order;
  for (int v = 0; v < n; ++v) degree[v] = t.degree(v);
  std::vector<int> removed(n, 0);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int w : t.neighbors(v))
        if (!removed[w] && --degree[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) out.push_back(v);
  return out;
}

}  // namespace

std::string free_tree_signature(const Graph& tree) {
  auto c = centroids(tree);
  if (c.size() == 1) return "1" + rooted_code(tree, c[0], -1).enc;
  auto a = rooted_code(tree, c[0], c[1]).enc;
  auto b = rooted_code(tree, c[1], c[0]).enc;
  if (b < a) std::swap(a, b);
  return "2" + a + b;
}

std::uint64_t tree_automorphism_count(const Graph& tree) {
  auto c = centroids(tree);
  if (c.size() == 1) return rooted_code(tree, c[0], -1).aut;
  auto a = rooted_code(tree, c[0], c[1]);
  auto b = rooted_code(tree, c[1], c[0]);
  std::uint64_t aut = a.aut * b.aut;
  if (a.enc == b.enc) aut *= 2;
  return aut;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("tree enumeration supports 1 <= n <= 16");
  if (n == 1) return {Graph(1, {})};
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  LevelSequences gen(n);
  while (const auto* levels = gen.next()) {
    Graph t = tree_from_levels(*levels);
    if (seen.insert(free_tree_signature(t)).second) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Graph> enumerate_asymmetric_trees(int n) {
  std::vector<Graph> out;
  for (auto& t : enumerate_trees(n))
    if (automorphism_group(t).order == 1) out.push_back(std::move(t));
  return out;
}

TreeCatalog build_catalog(int max_order) {
  if (max_order < 1) throw std::invalid_argument("catalog needs max_order >= 1");
  TreeCatalog cat;
  cat.max_order = max_order;
  cat.counts.assign(max_order + 1, 0);
  for (int n = 1; n <= max_order; ++n) {
    auto trees = enumerate_asymmetric_trees(n);
    std::vector<std::pair<CanonicalCert, Graph>> keyed;
    keyed.reserve(trees.size());
    for (auto& t : trees) keyed.emplace_back(canonical_certificate(t), std::move(t));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first.bytes < b.first.bytes; });
    cat.counts[n] = keyed.size();
    for (auto& [cert, t] : keyed) cat.omega.push_back(std::move(t));
  }
  return cat;
}

const TreeCatalog& shared_catalog(int max_order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TreeCatalog>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_order);
  if (it == cache.end())
    it = cache.emplace(max_order, std::make_unique<TreeCatalog>(build_catalog(max_order))).first;
  return *it->second;
}

Graph prufer_decode(const std::vector<int>& seq, int n) {
  if (n < 2) throw std::invalid_argument("pruefer decoding needs n >= 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("pruefer sequence must have length n-2");
  std::vector<int> degree(n, 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw std::invalid_argument("pruefer symbol out of range");
    ++degree[x];
  }
  std::vector<Edge> es;
  es.reserve(n - 1);
  // Standard linear-time decode with a moving pointer over leaves.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    es.push_back({leaf, x});
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  es.push_back({leaf, n - 1});
  return Graph(n, std::move(es));
}

}  // namespace symbreak
