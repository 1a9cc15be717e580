#include "symbreak/symmetry.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

namespace symbreak {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(images.size());
  for (int i = 0; i < size(); ++i) p.images[images[i]] = i;
  return p;
}

Permutation Permutation::then(const Permutation& other) const {
  Permutation p;
  p.images.resize(images.size());
  for (int i = 0; i < size(); ++i) p.images[i] = other.images[images[i]];
  return p;
}

void PermTable::push(const Permutation& p) {
  if (degree_ == 0) degree_ = p.size();
  flat_.insert(flat_.end(), p.images.begin(), p.images.end());
}

ColoredGraph::ColoredGraph(Graph g)
    : graph(std::move(g)),
      vertex_color(graph.order(), 0),
      edge_color(graph.edge_count(), 0) {}

ColoredGraph::ColoredGraph(Graph g, std::vector<int> vcolor, std::vector<int> ecolor)
    : graph(std::move(g)), vertex_color(std::move(vcolor)), edge_color(std::move(ecolor)) {
  if (static_cast<int>(vertex_color.size()) != graph.order() ||
      static_cast<int>(edge_color.size()) != graph.edge_count())
    throw std::invalid_argument("color maps must be total");
}

bool ColoredGraph::has_edge_colors() const {
  return std::any_of(edge_color.begin(), edge_color.end(), [](int c) { return c != 0; });
}

ColoredGraph colored_view(const Graph& g, const TwoColoring& c) {
  c.check_hosted(g);
  ColoredGraph cg(g);
  if (c.mode == ColorMode::vertex || c.mode == ColorMode::total)
    for (int v : c.red_vertices) cg.vertex_color[v] = 1;
  if (c.mode == ColorMode::edge || c.mode == ColorMode::total)
    for (const auto& [u, v] : c.red_edges) cg.edge_color[g.edge_index(u, v)] = 1;
  return cg;
}

namespace {

// ---------------------------------------------------------------------------
// Internal search graph. Edge colors are folded in by subdividing every edge
// into a pseudo-vertex that carries the edge color; vertex-only colorings are
// searched directly. Pseudo-vertices live in their own color space, so a
// class-preserving map always sends base vertices to base vertices.
// ---------------------------------------------------------------------------

struct InternalGraph {
  int n = 0;
  int base_n = 0;
  bool subdivided = false;
  std::vector<std::vector<int>> adj;
  std::vector<std::uint64_t> adjbits;  // n rows of `words` 64-bit words
  int words = 0;
  std::vector<int> cell_color;               // dense initial color per vertex
  std::vector<std::pair<int, int>> palette;  // dense id -> (kind, original color)

  bool adjacent(int u, int v) const {
    return (adjbits[static_cast<std::size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1;
  }
};

InternalGraph make_internal(const ColoredGraph& cg) {
  InternalGraph ig;
  const Graph& g = cg.graph;
  ig.base_n = g.order();
  ig.subdivided = cg.has_edge_colors();
  ig.n = ig.subdivided ? g.order() + g.edge_count() : g.order();
  ig.adj.assign(ig.n, {});
  std::vector<std::pair<int, int>> raw(ig.n);  // (kind, color) per internal vertex
  for (int v = 0; v < g.order(); ++v) raw[v] = {0, cg.vertex_color[v]};
  if (ig.subdivided) {
    for (int e = 0; e < g.edge_count(); ++e) {
      int w = g.order() + e;
      raw[w] = {1, cg.edge_color[e]};
      const auto& [a, b] = g.edges()[e];
      ig.adj[w] = {a, b};
      ig.adj[a].push_back(w);
      ig.adj[b].push_back(w);
    }
  } else {
    for (int v = 0; v < g.order(); ++v) ig.adj[v] = g.neighbors(v);
  }
  for (auto& nb : ig.adj) std::sort(nb.begin(), nb.end());

  std::vector<std::pair<int, int>> pal = raw;
  std::sort(pal.begin(), pal.end());
  pal.erase(std::unique(pal.begin(), pal.end()), pal.end());
  ig.palette = pal;
  ig.cell_color.resize(ig.n);
  for (int v = 0; v < ig.n; ++v)
    ig.cell_color[v] =
        static_cast<int>(std::lower_bound(pal.begin(), pal.end(), raw[v]) - pal.begin());

  ig.words = (ig.n + 63) / 64;
  ig.adjbits.assign(static_cast<std::size_t>(ig.n) * ig.words, 0);
  for (int v = 0; v < ig.n; ++v)
    for (int w : ig.adj[v])
      ig.adjbits[static_cast<std::size_t>(v) * ig.words + (w >> 6)] |= std::uint64_t{1}
                                                                       << (w & 63);
  return ig;
}

// Ordered partition in nauty style: lab lists vertices, cells are intervals.
struct Partition {
  std::vector<int> lab;     // position -> vertex
  std::vector<int> pos;     // vertex -> position
  std::vector<int> cstart;  // position -> start position of its cell
  std::vector<int> clen;    // valid at cell starts
  int cells = 0;
};

enum class SearchMode { group, certificate, find_nonidentity };

struct SearchOutcome {
  std::vector<Permutation> generators;  // on the internal graph
  std::vector<std::uint8_t> cert;       // certificate bytes (certificate mode)
  std::vector<int> canonical_lab;       // best leaf, position -> vertex
  bool nonidentity_found = false;
  std::uint64_t nodes = 0;
};

class AutSearcher {
 public:
  AutSearcher(const InternalGraph& ig, SearchMode mode, std::uint64_t budget)
      : g_(ig), mode_(mode), budget_(budget) {}

  SearchOutcome run() {
    init_partition();
    std::deque<int> queue;
    for (int p = 0; p < g_.n;) {
      queue.push_back(p);
      p += part_.clen[p];
    }
    refine(queue);
    rec();
    SearchOutcome out;
    out.generators = std::move(gens_);
    out.nodes = nodes_;
    out.nonidentity_found = nonidentity_found_;
    if (mode_ == SearchMode::certificate) {
      out.canonical_lab = best_lab_;
      out.cert = encode_cert();
    }
    return out;
  }

 private:
  const InternalGraph& g_;
  SearchMode mode_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;

  Partition part_;
  std::vector<int> cnt_;
  std::vector<int> prefix_;

  std::vector<Permutation> gens_;
  bool nonidentity_found_ = false;

  bool have_first_ = false;
  std::vector<int> first_lab_;
  bool have_best_ = false;
  std::vector<std::uint8_t> best_bits_;
  std::vector<int> best_lab_;

  void init_partition() {
    int n = g_.n;
    part_.lab.resize(n);
    std::iota(part_.lab.begin(), part_.lab.end(), 0);
    std::stable_sort(part_.lab.begin(), part_.lab.end(),
                     [&](int a, int b) { return g_.cell_color[a] < g_.cell_color[b]; });
    part_.pos.resize(n);
    part_.cstart.resize(n);
    part_.clen.assign(n, 0);
    part_.cells = 0;
    int s = 0;
    for (int p = 0; p < n; ++p) {
      part_.pos[part_.lab[p]] = p;
      if (p > 0 && g_.cell_color[part_.lab[p]] != g_.cell_color[part_.lab[p - 1]]) s = p;
      part_.cstart[p] = s;
    }
    for (int p = 0; p < n;) {
      int e = p + 1;
      while (e < n && part_.cstart[e] == p) ++e;
      part_.clen[p] = e - p;
      ++part_.cells;
      p = e;
    }
    cnt_.assign(n, 0);
  }

  // Equitable refinement by neighbor counts against splitter cells.
  void refine(std::deque<int>& queue) {
    int n = g_.n;
    while (!queue.empty() && part_.cells < n) {
      int ws = queue.front();
      queue.pop_front();
      int wlen = part_.clen[ws];
      std::vector<int> touched;
      for (int p = ws; p < ws + wlen; ++p)
        for (int u : g_.adj[part_.lab[p]]) {
          if (cnt_[u] == 0) touched.push_back(u);
          ++cnt_[u];
        }
      std::vector<int> affected;
      for (int u : touched) {
        int s = part_.cstart[part_.pos[u]];
        if (part_.clen[s] > 1) affected.push_back(s);
      }
      std::sort(affected.begin(), affected.end());
      affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
      for (int s : affected) {
        int len = part_.clen[s];
        int first_cnt = cnt_[part_.lab[s]];
        bool uniform = true;
        for (int p = s + 1; p < s + len; ++p)
          if (cnt_[part_.lab[p]] != first_cnt) {
            uniform = false;
            break;
          }
        if (uniform) continue;
        std::stable_sort(part_.lab.begin() + s, part_.lab.begin() + s + len,
                         [&](int a, int b) { return cnt_[a] < cnt_[b]; });
        int frag = s;
        for (int p = s; p < s + len; ++p) {
          if (p > s && cnt_[part_.lab[p]] != cnt_[part_.lab[p - 1]]) {
            part_.clen[frag] = p - frag;
            queue.push_back(frag);
            ++part_.cells;
            frag = p;
          }
          part_.cstart[p] = frag;
          part_.pos[part_.lab[p]] = p;
        }
        part_.clen[frag] = s + len - frag;
        queue.push_back(frag);
        --part_.cells;  // the original cell was recounted above
        ++part_.cells;
      }
      for (int u : touched) cnt_[u] = 0;
    }
  }

  int target_cell() const {
    int best = -1, best_len = g_.n + 1;
    for (int p = 0; p < g_.n;) {
      int len = part_.clen[p];
      if (len > 1 && len < best_len) {
        best = p;
        best_len = len;
      }
      p += len;
    }
    return best;
  }

  void individualize(int v, std::deque<int>& queue) {
    int s = part_.cstart[part_.pos[v]];
    int len = part_.clen[s];
    int pv = part_.pos[v];
    std::swap(part_.lab[s], part_.lab[pv]);
    part_.pos[part_.lab[pv]] = pv;
    part_.pos[part_.lab[s]] = s;
    part_.clen[s] = 1;
    part_.clen[s + 1] = len - 1;
    for (int p = s + 1; p < s + len; ++p) part_.cstart[p] = s + 1;
    ++part_.cells;
    queue.push_back(s);
    queue.push_back(s + 1);
  }

  bool is_automorphism(const Permutation& perm) const {
    for (int v = 0; v < g_.n; ++v) {
      if (g_.cell_color[perm.images[v]] != g_.cell_color[v]) return false;
      for (int w : g_.adj[v])
        if (!g_.adjacent(perm.images[v], perm.images[w])) return false;
    }
    return true;
  }

  // Maps leaf `a` onto leaf `b`: vertex a[p] -> b[p].
  Permutation leaf_map(const std::vector<int>& a, const std::vector<int>& b) const {
    Permutation perm;
    perm.images.resize(g_.n);
    for (int p = 0; p < g_.n; ++p) perm.images[a[p]] = b[p];
    return perm;
  }

  std::vector<std::uint8_t> leaf_bits(const std::vector<int>& lab) const {
    int n = g_.n;
    std::vector<std::uint8_t> bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
    std::size_t k = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q, ++k)
        if (g_.adjacent(lab[p], lab[q])) bits[k >> 3] |= static_cast<std::uint8_t>(1u << (k & 7));
    return bits;
  }

  std::vector<std::uint8_t> encode_cert() const {
    std::vector<std::uint8_t> out;
    auto push32 = [&out](std::uint32_t x) {
      out.push_back(x & 0xff);
      out.push_back((x >> 8) & 0xff);
      out.push_back((x >> 16) & 0xff);
      out.push_back((x >> 24) & 0xff);
    };
    out.push_back(g_.subdivided ? 'S' : 'P');
    push32(static_cast<std::uint32_t>(g_.n));
    push32(static_cast<std::uint32_t>(g_.base_n));
    for (int p = 0; p < g_.n; ++p) {
      const auto& [kind, color] = g_.palette[g_.cell_color[best_lab_[p]]];
      push32(static_cast<std::uint32_t>(kind));
      push32(static_cast<std::uint32_t>(color));
    }
    out.insert(out.end(), best_bits_.begin(), best_bits_.end());
    return out;
  }

  void add_generator(Permutation perm) {
    for (const auto& known : gens_)
      if (known == perm) return;
    gens_.push_back(std::move(perm));
  }

  bool done() const {
    return mode_ == SearchMode::find_nonidentity && nonidentity_found_;
  }

  void handle_leaf() {
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = part_.lab;
      if (mode_ == SearchMode::certificate) {
        best_bits_ = leaf_bits(part_.lab);
        best_lab_ = part_.lab;
        have_best_ = true;
      }
      return;
    }
    Permutation perm = leaf_map(first_lab_, part_.lab);
    if (!perm.is_identity() && is_automorphism(perm)) {
      add_generator(perm);
      nonidentity_found_ = true;
    }
    if (mode_ == SearchMode::certificate) {
      auto bits = leaf_bits(part_.lab);
      if (bits < best_bits_) {
        best_bits_ = std::move(bits);
        best_lab_ = part_.lab;
      } else if (bits == best_bits_ && part_.lab != best_lab_) {
        Permutation perm2 = leaf_map(best_lab_, part_.lab);
        if (!perm2.is_identity() && is_automorphism(perm2)) add_generator(std::move(perm2));
      }
    }
  }

  void rec() {
    if (++nodes_ > budget_)
      throw budget_exhausted("symmetry search exceeded node budget of " +
                             std::to_string(budget_));
    if (part_.cells == g_.n) {
      handle_leaf();
      return;
    }
    int tc = target_cell();
    std::vector<int> candidates(part_.lab.begin() + tc, part_.lab.begin() + tc + part_.clen[tc]);
    Partition saved = part_;
    std::vector<int> explored;
    for (int v : candidates) {
      if (done()) return;
      if (!explored.empty() && in_explored_orbit(v, candidates, explored)) continue;
      std::deque<int> queue;
      individualize(v, queue);
      refine(queue);
      prefix_.push_back(v);
      rec();
      prefix_.pop_back();
      part_ = saved;
      explored.push_back(v);
    }
  }

  // True if some discovered automorphism fixing the current prefix pointwise
  // maps v into the explored sibling set.
  bool in_explored_orbit(int v, const std::vector<int>& candidates,
                         const std::vector<int>& explored) const {
    std::vector<int> parent(g_.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gen : gens_) {
      bool fixes = true;
      for (int u : prefix_)
        if (gen.images[u] != u) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (int x : candidates) {
        int y = gen.images[x];
        int rx = find(x), ry = find(y);
        if (rx != ry) parent[rx] = ry;
      }
    }
    if (!any) return false;
    int rv = find(v);
    for (int u : explored)
      if (find(u) == rv) return true;
    return false;
  }
};

SearchOutcome run_search(const ColoredGraph& cg, SearchMode mode, const EngineOptions& opts) {
  InternalGraph ig = make_internal(cg);
  AutSearcher searcher(ig, mode, opts.node_budget);
  return searcher.run();
}

std::vector<Permutation> project_to_base(const std::vector<Permutation>& gens, int base_n) {
  std::vector<Permutation> out;
  for (const auto& gen : gens) {
    Permutation p;
    p.images.assign(gen.images.begin(), gen.images.begin() + base_n);
    bool id = p.is_identity();
    if (!id) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic Schreier-Sims for group order.
// ---------------------------------------------------------------------------

class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Permutation>& generators) : degree_(degree) {
    if (!generators.empty()) {
      levels_.push_back({});
      for (const auto& gen : generators)
        if (!gen.is_identity()) levels_[0].gens.push_back(gen);
      if (levels_[0].gens.empty()) {
        levels_.clear();
      } else {
        choose_base_point(0);
        build();
      }
    }
  }

  std::uint64_t order() const {
    unsigned __int128 o = 1;
    for (const auto& level : levels_) {
      o *= level.orbit_order.size();
      if (o > static_cast<unsigned __int128>(UINT64_MAX))
        throw std::overflow_error("group order exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(o);
  }

  /// Every group element exactly once, as products of one transversal
  /// representative per level. Deterministic order.
  PermTable elements() const {
    PermTable table(degree_);
    Permutation acc = Permutation::identity(degree_);
    emit(0, acc, table);
    return table;
  }

 private:
  void emit(std::size_t level, const Permutation& acc, PermTable& table) const {
    if (level == levels_.size()) {
      table.push(acc);
      return;
    }
    for (int beta : levels_[level].orbit_order)
      emit(level + 1, levels_[level].transversal.at(beta).then(acc), table);
  }

  struct Level {
    int base_point = -1;
    std::vector<Permutation> gens;
    std::map<int, Permutation> transversal;
    std::vector<int> orbit_order;
  };

  int degree_;
  std::vector<Level> levels_;

  void choose_base_point(std::size_t l) {
    for (const auto& gen : levels_[l].gens)
      for (int v = 0; v < degree_; ++v)
        if (gen.images[v] != v) {
          levels_[l].base_point = std::min(
              levels_[l].base_point < 0 ? degree_ : levels_[l].base_point, v);
          break;
        }
  }

  void rebuild_orbit(std::size_t l) {
    Level& level = levels_[l];
    level.transversal.clear();
    level.orbit_order.clear();
    level.transversal[level.base_point] = Permutation::identity(degree_);
    level.orbit_order.push_back(level.base_point);
    for (std::size_t head = 0; head < level.orbit_order.size(); ++head) {
      int beta = level.orbit_order[head];
      for (const auto& gen : level.gens) {
        int gamma = gen.images[beta];
        if (!level.transversal.count(gamma)) {
          level.transversal[gamma] = level.transversal[beta].then(gen);
          level.orbit_order.push_back(gamma);
        }
      }
    }
  }

  // Sifts h through levels starting at `from`; returns the residue and the
  // level where sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const {
    for (std::size_t j = from; j < levels_.size(); ++j) {
      int delta = h.images[levels_[j].base_point];
      auto it = levels_[j].transversal.find(delta);
      if (it == levels_[j].transversal.end()) return {std::move(h), j};
      h = h.then(it->second.inverse());
    }
    return {std::move(h), levels_.size()};
  }

  void build() {
    rebuild_orbit(0);
    std::size_t i = levels_.size();
    while (i > 0) {
      std::size_t lvl = i - 1;
      bool restarted = false;
      Level& level = levels_[lvl];
      for (std::size_t oi = 0; oi < level.orbit_order.size() && !restarted; ++oi) {
        int beta = level.orbit_order[oi];
        const Permutation& u_beta = level.transversal.at(beta);
        for (std::size_t si = 0; si < level.gens.size() && !restarted; ++si) {
          Permutation moved = u_beta.then(level.gens[si]);
          int image = moved.images[level.base_point];
          Permutation schreier = moved.then(level.transversal.at(image).inverse());
          if (schreier.is_identity()) continue;
          auto [residue, j] = strip(std::move(schreier), lvl + 1);
          if (residue.is_identity()) continue;
          if (j == levels_.size()) {
            levels_.push_back({});
            int bp = degree_;
            for (int v = 0; v < degree_; ++v)
              if (residue.images[v] != v) {
                bp = v;
                break;
              }
            levels_.back().base_point = bp;
          }
          for (std::size_t t = lvl + 1; t <= j && t < levels_.size(); ++t) {
            levels_[t].gens.push_back(residue);
            rebuild_orbit(t);
          }
          i = std::min(j + 1, levels_.size());
          restarted = true;
        }
      }
      if (!restarted) --i;
    }
  }
};

std::uint64_t order_from_generators(int degree, const std::vector<Permutation>& generators) {
  StabilizerChain chain(degree, generators);
  return chain.order();
}

}  // namespace

std::uint64_t group_order(int degree, const std::vector<Permutation>& generators) {
  return order_from_generators(degree, generators);
}

AutGroup automorphism_group(const ColoredGraph& cg, const EngineOptions& opts) {
  SearchOutcome outcome = run_search(cg, SearchMode::group, opts);
  AutGroup group;
  group.degree = cg.graph.order();
  group.generators = project_to_base(outcome.generators, cg.graph.order());
  group.order = order_from_generators(group.degree, group.generators);
  return group;
}

AutGroup automorphism_group(const Graph& g, const EngineOptions& opts) {
  return automorphism_group(ColoredGraph(g), opts);
}

PermTable enumerate_elements(const AutGroup& group, std::uint64_t cap) {
  if (group.order > cap) throw std::invalid_argument("group too large to enumerate");
  if (group.generators.empty()) {
    PermTable table(group.degree);
    table.push(Permutation::identity(group.degree));
    return table;
  }
  StabilizerChain chain(group.degree, group.generators);
  PermTable table = chain.elements();
  if (table.size() != group.order)
    throw std::logic_error("element expansion disagrees with computed group order");
  return table;
}

void ensure_elements(AutGroup& group, std::uint64_t cap) {
  if (!group.elements && group.order <= cap) group.elements = enumerate_elements(group, cap);
}

CanonicalCert canonical_certificate(const ColoredGraph& cg, const EngineOptions& opts) {
  SearchOutcome outcome = run_search(cg, SearchMode::certificate, opts);
  return CanonicalCert{std::move(outcome.cert)};
}

CanonicalCert canonical_certificate(const Graph& g, const EngineOptions& opts) {
  return canonical_certificate(ColoredGraph(g), opts);
}

std::optional<Permutation> are_color_isomorphic(const ColoredGraph& a, const ColoredGraph& b,
                                                const EngineOptions& opts) {
  if (a.graph.order() != b.graph.order() || a.graph.edge_count() != b.graph.edge_count())
    return std::nullopt;
  InternalGraph ia = make_internal(a);
  InternalGraph ib = make_internal(b);
  if (ia.n != ib.n || ia.palette != ib.palette) return std::nullopt;
  SearchOutcome oa = AutSearcher(ia, SearchMode::certificate, opts.node_budget).run();
  SearchOutcome ob = AutSearcher(ib, SearchMode::certificate, opts.node_budget).run();
  if (oa.cert != ob.cert) return std::nullopt;
  // Vertex at canonical position p of `a` maps to the one at position p of `b`.
  Permutation witness;
  witness.images.assign(a.graph.order(), -1);
  std::vector<int> pos_a(ia.n);
  for (int p = 0; p < ia.n; ++p) pos_a[oa.canonical_lab[p]] = p;
  for (int v = 0; v < a.graph.order(); ++v) witness.images[v] = ob.canonical_lab[pos_a[v]];
  // Sanity: certificates agreeing must yield a color-preserving isomorphism.
  for (int v = 0; v < a.graph.order(); ++v)
    if (b.vertex_color[witness.images[v]] != a.vertex_color[v])
      throw std::logic_error("certificate collision without color isomorphism");
  for (int e = 0; e < a.graph.edge_count(); ++e) {
    auto [u, v] = a.graph.edges()[e];
    int idx = b.graph.edge_index(witness.images[u], witness.images[v]);
    if (idx < 0 || b.edge_color[idx] != a.edge_color[e])
      throw std::logic_error("certificate collision without color isomorphism");
  }
  return witness;
}

std::optional<Permutation> are_isomorphic(const Graph& a, const Graph& b,
                                          const EngineOptions& opts) {
  return are_color_isomorphic(ColoredGraph(a), ColoredGraph(b), opts);
}

bool is_distinguishing(const Graph& g, const TwoColoring& c, const EngineOptions& opts) {
  ColoredGraph cg = colored_view(g, c);
  SearchOutcome outcome = run_search(cg, SearchMode::find_nonidentity, opts);
  return !outcome.nonidentity_found;
}

bool is_determining_set(const Graph& g, const std::vector<int>& s, const EngineOptions& opts) {
  ColoredGraph cg(g);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.order()) throw std::invalid_argument("set vertex out of range");
    cg.vertex_color[s[i]] = static_cast<int>(i) + 1;
  }
  SearchOutcome outcome = run_search(cg, SearchMode::find_nonidentity, opts);
  return !outcome.nonidentity_found;
}

namespace {

std::vector<std::vector<int>> orbits_under(int universe,
                                           const std::vector<Permutation>& generators,
                                           const std::function<int(const Permutation&, int)>& act) {
  std::vector<int> parent(universe);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : generators)
    for (int x = 0; x < universe; ++x) {
      int rx = find(x), ry = find(act(gen, x));
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  std::map<int, std::vector<int>> buckets;
  for (int x = 0; x < universe; ++x) buckets[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : buckets) out.push_back(std::move(members));
  return out;
}

}  // namespace

std::vector<std::vector<int>> vertex_orbits(const Graph& g, const AutGroup& group) {
  return orbits_under(g.order(), group.generators,
                      [](const Permutation& p, int v) { return p.images[v]; });
}

std::vector<std::vector<int>> edge_orbits(const Graph& g, const AutGroup& group) {
  return orbits_under(g.edge_count(), group.generators, [&](const Permutation& p, int e) {
    auto [u, v] = g.edges()[e];
    int idx = g.edge_index(p.images[u], p.images[v]);
    if (idx < 0) throw std::logic_error("generator does not preserve adjacency");
    return idx;
  });
}

PermTable edge_action(const Graph& g, const PermTable& elements) {
  PermTable table(g.edge_count());
  Permutation row;
  row.images.resize(g.edge_count());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const int* p = elements[i];
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      int idx = g.edge_index(p[u], p[v]);
      if (idx < 0) throw std::logic_error("element does not preserve adjacency");
      row.images[e] = idx;
    }
    table.push(row);
  }
  return table;
}

namespace {

// True if S (sorted) is the lexicographically least member of its orbit.
bool subset_is_lex_min(const std::vector<int>& subset, const PermTable& action) {
  int m = static_cast<int>(subset.size());
  std::vector<int> image(m);
  for (std::size_t i = 0; i < action.size(); ++i) {
    const int* p = action[i];
    int min_image = action.degree();
    for (int k = 0; k < m; ++k) min_image = std::min(min_image, p[subset[k]]);
    if (min_image > subset[0]) continue;
    if (min_image < subset[0]) return false;
    for (int k = 0; k < m; ++k) image[k] = p[subset[k]];
    std::sort(image.begin(), image.end());
    if (std::lexicographical_compare(image.begin(), image.end(), subset.begin(), subset.end()))
      return false;
  }
  return true;
}

bool rep_stream_rec(std::vector<int>& subset, int next, int universe, int m,
                    const PermTable& action, const std::vector<int>& shard_filter,
                    const std::function<bool(const std::vector<int>&)>& visit) {
  if (static_cast<int>(subset.size()) == m) return visit(subset);
  for (int x = next; x <= universe - (m - static_cast<int>(subset.size())); ++x) {
    if (subset.empty() && !shard_filter.empty() &&
        !std::binary_search(shard_filter.begin(), shard_filter.end(), x))
      continue;
    subset.push_back(x);
    // A set whose prefix is not orbit-minimal cannot be orbit-minimal itself.
    bool keep = subset_is_lex_min(subset, action);
    if (keep && !rep_stream_rec(subset, x + 1, universe, m, action, shard_filter, visit)) {
      subset.pop_back();
      return false;
    }
    subset.pop_back();
  }
  return true;
}

}  // namespace

bool for_each_subset_orbit_rep(int universe, int m, const PermTable& action,
                               const std::vector<int>& shard_filter,
                               const std::function<bool(const std::vector<int>&)>& visit) {
  if (m == 0) return visit({});
  if (m > universe) return true;
  std::vector<int> subset;
  subset.reserve(m);
  return rep_stream_rec(subset, 0, universe, m, action, shard_filter, visit);
}

std::uint64_t subset_orbit_size(const std::vector<int>& subset, const PermTable& action) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t stab = 0;
  std::vector<int> image(sorted.size());
  for (std::size_t i = 0; i < action.size(); ++i) {
    const int* p = action[i];
    for (std::size_t k = 0; k < sorted.size(); ++k) image[k] = p[sorted[k]];
    std::sort(image.begin(), image.end());
    if (image == sorted) ++stab;
  }
  return action.size() / stab;
}

std::vector<int> min_determining_set(const Graph& g, std::optional<int> distance_floor,
                                     const EngineOptions& opts) {
  if (!g.connected()) throw std::invalid_argument("determining-set search needs a connected graph");
  AutGroup group = automorphism_group(g, opts);
  if (group.order == 1) return {};
  ensure_elements(group, opts.enumeration_cap);
  std::vector<std::vector<int>> dist;
  if (distance_floor) {
    dist.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) dist.push_back(g.distances_from(v));
  }
  auto respects_floor = [&](const std::vector<int>& s) {
    if (!distance_floor) return true;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (dist[s[i]][s[j]] < *distance_floor) return false;
    return true;
  };
  for (int m = 1; m <= g.order(); ++m) {
    std::vector<int> found;
    auto try_set = [&](const std::vector<int>& s) {
      if (!respects_floor(s)) return true;
      if (is_determining_set(g, s, opts)) {
        found = s;
        return false;
      }
      return true;
    };
    if (group.elements) {
      for_each_subset_orbit_rep(g.order(), m, *group.elements, {}, try_set);
    } else {
      // Group too large to enumerate: fall back to plain lexicographic scan.
      std::vector<int> subset;
      std::function<bool(int)> plain = [&](int next) {
        if (static_cast<int>(subset.size()) == m) return try_set(subset);
        for (int x = next; x <= g.order() - (m - static_cast<int>(subset.size())); ++x) {
          subset.push_back(x);
          bool go_on = plain(x + 1);
          subset.pop_back();
          if (!go_on) return false;
        }
        return true;
      };
      plain(0);
    }
    if (!found.empty()) return found;
  }
  throw std::logic_error("no determining set found");
}

}  // namespace symbreak
