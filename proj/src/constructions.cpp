#include "symbreak/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "symbreak/symmetry.hpp"

namespace symbreak {

namespace {

Edge product_edge(const ProductGraph& pg, const std::vector<int>& a, const std::vector<int>& b) {
  int u = pg.vertex_at(a), v = pg.vertex_at(b);
  if (!pg.graph.has_edge(u, v)) throw std::logic_error("construction selected a non-edge");
  return u < v ? Edge{u, v} : Edge{v, u};
}

Construction finish(std::string spec, ProductGraph pg, TwoColoring coloring) {
  coloring.normalize();
  Construction out{std::move(spec), std::move(pg), std::move(coloring), false};
  if (!is_distinguishing(out.product.graph, out.coloring))
    throw std::logic_error("constructed coloring failed the distinguishing check on " +
                           out.graph_spec);
  out.verified = true;
  return out;
}

int ceil_log2(int n) {
  int r = 0;
  while ((1 << r) < n) ++r;
  return r;
}

std::string power_spec(char kind, int n, int k) {
  return std::string(1, kind) + std::to_string(n) + (k > 1 ? "^" + std::to_string(k) : "");
}

std::string product_spec(char kind, const std::vector<int>& orders) {
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += "*";
    s += kind;
    s += std::to_string(orders[i]);
  }
  return s;
}

void require_distinct(const std::vector<int>& orders) {
  std::set<int> seen(orders.begin(), orders.end());
  if (seen.size() != orders.size())
    throw std::invalid_argument("factor orders must be pairwise distinct");
}

}  // namespace

Construction path_power_coloring(int n, int k, ColorMode mode) {
  if (n < 3) throw std::invalid_argument("path power needs n >= 3");
  if (k < 1) throw std::invalid_argument("power must be positive");
  if (mode == ColorMode::edge && k > 1 + n / 2)
    throw std::invalid_argument("edge mode needs k <= 1 + floor(n/2)");
  if (mode == ColorMode::vertex && k > n / 2)
    throw std::invalid_argument("vertex mode needs k <= floor(n/2)");
  if (mode == ColorMode::total) throw std::invalid_argument("mode must be vertex or edge");
  std::vector<Graph> factors(k, generate(Family::path, n));
  ProductGraph pg = cartesian_product(factors);
  TwoColoring col;
  col.mode = mode;
  if (mode == ColorMode::edge) {
    // Red edge (0, 0, 1, 2, ..., k-2) -- (1, 0, 1, 2, ..., k-2).
    std::vector<int> a(k), b(k);
    for (int i = 2; i < k; ++i) a[i] = b[i] = i - 1;
    a[0] = 0;
    b[0] = 1;
    col.red_edges.push_back(product_edge(pg, a, b));
  } else {
    // Red vertex on the shifted diagonal (0, 1, ..., k-1); the plain
    // diagonal would survive factor swaps.
    std::vector<int> a(k);
    for (int i = 0; i < k; ++i) a[i] = i;
    col.red_vertices.push_back(pg.vertex_at(a));
  }
  return finish(power_spec('P', n, k), std::move(pg), std::move(col));
}

Construction path_product_coloring(const std::vector<int>& orders, ColorMode mode) {
  if (orders.empty()) throw std::invalid_argument("need at least one factor");
  for (int n : orders)
    if (n < 3) throw std::invalid_argument("path factors need order >= 3");
  require_distinct(orders);
  if (mode == ColorMode::total) throw std::invalid_argument("mode must be vertex or edge");
  std::vector<Graph> factors;
  for (int n : orders) factors.push_back(generate(Family::path, n));
  ProductGraph pg = cartesian_product(factors);
  int k = static_cast<int>(orders.size());
  TwoColoring col;
  col.mode = mode;
  std::vector<int> zero(k, 0);
  if (mode == ColorMode::edge) {
    std::vector<int> one = zero;
    one[0] = 1;
    col.red_edges.push_back(product_edge(pg, zero, one));
  } else {
    col.red_vertices.push_back(pg.vertex_at(zero));
  }
  return finish(product_spec('P', orders), std::move(pg), std::move(col));
}

namespace {

TwoColoring cycle_pattern(const ProductGraph& pg, ColorMode mode) {
  const int k = pg.factor_count();
  TwoColoring col;
  col.mode = mode;
  std::vector<int> zero(k, 0);
  std::vector<int> one = zero;
  one[0] = 1;
  // Staircase base (0, ., 2, 3, ..., k-1) carrying the second red element.
  std::vector<int> stair(k);
  stair[0] = 0;
  for (int i = 2; i < k; ++i) {
    if (i >= pg.factors[i].order())
      throw std::invalid_argument("coordinate pattern out of range; pass larger factors first");
    stair[i] = i;
  }
  if (mode == ColorMode::edge) {
    col.red_edges.push_back(product_edge(pg, zero, one));
    std::vector<int> a = stair, b = stair;
    a[1] = 1;
    b[1] = 2;
    col.red_edges.push_back(product_edge(pg, a, b));
  } else {
    col.red_vertices.push_back(pg.vertex_at(zero));
    col.red_vertices.push_back(pg.vertex_at(one));
    std::vector<int> a = stair;
    // With exactly two equal factors, position 1 in the second coordinate
    // makes the red triple swap-symmetric; position 2 breaks the swap.
    bool equal_pair = k == 2 && pg.factors[0] == pg.factors[1];
    a[1] = equal_pair ? 2 : 1;
    col.red_vertices.push_back(pg.vertex_at(a));
  }
  return col;
}

}  // namespace

Construction cycle_power_coloring(int n, int k, ColorMode mode) {
  if (n < 5) throw std::invalid_argument("cycle power needs n >= 5");
  if (k < 2) throw std::invalid_argument("cycle power needs k >= 2");
  if (mode == ColorMode::edge && k > 1 + n / 2)
    throw std::invalid_argument("edge mode needs k <= 1 + floor(n/2)");
  if (mode == ColorMode::vertex && k > n / 2)
    throw std::invalid_argument("vertex mode needs k <= floor(n/2)");
  if (mode == ColorMode::total) throw std::invalid_argument("mode must be vertex or edge");
  std::vector<Graph> factors(k, generate(Family::cycle, n));
  ProductGraph pg = cartesian_product(factors);
  TwoColoring col = cycle_pattern(pg, mode);
  return finish(power_spec('C', n, k), std::move(pg), std::move(col));
}

Construction cycle_product_coloring(const std::vector<int>& orders, ColorMode mode) {
  if (orders.size() < 2) throw std::invalid_argument("need at least two factors");
  for (int n : orders)
    if (n < 5) throw std::invalid_argument("cycle factors need order >= 5");
  require_distinct(orders);
  if (mode == ColorMode::total) throw std::invalid_argument("mode must be vertex or edge");
  std::vector<Graph> factors;
  for (int n : orders) factors.push_back(generate(Family::cycle, n));
  ProductGraph pg = cartesian_product(factors);
  TwoColoring col = cycle_pattern(pg, mode);
  return finish(product_spec('C', orders), std::move(pg), std::move(col));
}

Construction small_hypercube_coloring(int k) {
  if (k != 3 && k != 4) throw std::invalid_argument("fixed colorings exist for Q3 and Q4 only");
  ProductGraph pg = product_from_spec("Q" + std::to_string(k));
  TwoColoring col;
  col.mode = ColorMode::edge;
  if (k == 3) {
    // (0,0,0)(1,0,0), (1,0,0)(1,1,0), (0,1,1)(1,1,1)
    col.red_edges = {{0, 4}, {4, 6}, {3, 7}};
  } else {
    // (0,0,0,1)(1,0,0,1), (0,0,0,0)(0,1,0,0), (0,0,0,1)(0,1,0,1)
    col.red_edges = {{1, 9}, {0, 4}, {1, 5}};
  }
  return finish("Q" + std::to_string(k), std::move(pg), std::move(col));
}

namespace {

int popcount_distance(int a, int b) { return __builtin_popcount(a ^ b); }

// Vertices of the determining set built from column labels: s_1 = 0 and
// row vectors s_2..s_r over the n coordinates, column c carrying the bits
// of labels[c]. Distinct labels pin every coordinate, so the pointwise
// stabilizer is trivial by construction.
std::vector<int> det_set_from_labels(const std::vector<int>& labels, int n, int r) {
  std::vector<int> set(r, 0);
  for (int row = 0; row + 1 < r; ++row)
    for (int c = 0; c < n; ++c)
      if ((labels[c] >> row) & 1) set[row + 1] |= 1 << (n - 1 - c);
  return set;
}

bool pairwise_distance_at_least(const std::vector<int>& vs, int floor_) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (popcount_distance(vs[i], vs[j]) < floor_) return false;
  return true;
}

// Lexicographically first choice of `count` distinct labels < limit whose
// derived vertex set has the required pairwise distance.
bool next_label_combination(std::vector<int>& combo, int limit) {
  int k = static_cast<int>(combo.size());
  for (int i = k - 1; i >= 0; --i) {
    if (combo[i] < limit - (k - i)) {
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> find_det_set(int n, int r, int floor_) {
  int limit = 1 << (r - 1);
  std::vector<int> combo(n);
  for (int i = 0; i < n; ++i) combo[i] = i;
  do {
    auto set = det_set_from_labels(combo, n, r);
    if (pairwise_distance_at_least(set, floor_)) return set;
  } while (next_label_combination(combo, limit));
  return {};
}

TwoColoring star_edges_at(const std::vector<int>& set, const std::vector<int>& edges_per_vertex,
                          int n, int rotation) {
  TwoColoring col;
  col.mode = ColorMode::edge;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (int d = 0; d < edges_per_vertex[i]; ++d) {
      int dim = (d + rotation) % n;
      int u = set[i], v = set[i] ^ (1 << dim);
      col.red_edges.push_back({std::min(u, v), std::max(u, v)});
    }
  col.normalize();
  return col;
}

}  // namespace

Construction hypercube_det_coloring(int n) {
  if (n < 5) throw std::invalid_argument("needs dimension >= 5");
  if (n > 10) throw std::invalid_argument("dimension above desk scale");
  int r = ceil_log2(n) + 1;
  ProductGraph pg = product_from_spec("Q" + std::to_string(n));
  for (int floor_ : {3, 2}) {
    std::vector<int> set = find_det_set(n, r, floor_);
    if (set.empty()) continue;
    if (!is_determining_set(pg.graph, set))
      throw std::logic_error("label construction failed to determine the hypercube");
    std::vector<int> per(r);
    for (int i = 0; i < r; ++i) per[i] = i + 2;  // v_i gets i+1 edges, i counted from 1
    for (int rot = 0; rot < n; ++rot) {
      TwoColoring col = star_edges_at(set, per, n, rot);
      if (static_cast<int>(col.red_edges.size()) != r * (r + 3) / 2) continue;
      if (is_distinguishing(pg.graph, col)) {
        Construction out{"Q" + std::to_string(n), std::move(pg), std::move(col), true};
        return out;
      }
    }
  }
  throw budget_exhausted("no verified determining-set edge bundle found for Q" +
                         std::to_string(n));
}

// Two incident red edges per class vertex; `stagger` offsets the dimension
// pair per vertex so edges at adjacent class vertices stay distinct.
TwoColoring class_edge_pairs(const std::vector<int>& set, int n, int rotation, bool stagger) {
  TwoColoring col;
  col.mode = ColorMode::edge;
  for (std::size_t i = 0; i < set.size(); ++i) {
    int base = rotation + (stagger ? 2 * static_cast<int>(i) : 0);
    for (int d = 0; d < 2; ++d) {
      int dim = (base + d) % n;
      int u = set[i], v = set[i] ^ (1 << dim);
      col.red_edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  col.normalize();
  return col;
}

Construction hypercube_class_coloring(int n) {
  if (n < 5) throw std::invalid_argument("needs dimension >= 5");
  if (n > 10) throw std::invalid_argument("dimension above desk scale");
  int size = 2 * ceil_log2(n) - 1;
  ProductGraph pg = product_from_spec("Q" + std::to_string(n));
  int total = 1 << n;
  // The cited classes keep pairwise distance above two; that is infeasible
  // in low dimensions (no such class exists in Q5 even at distance 2), so
  // the floor relaxes until a verified class appears. Candidate sets come
  // from a fixed-seed sampler: lexicographic pools are near-linear codes
  // whose subsets keep coordinate symmetries alive.
  for (int floor_ : {3, 2, 1}) {
    std::mt19937 rng(0x5eedu + static_cast<unsigned>(100 * n + floor_));
    for (int attempt = 0; attempt < 5000; ++attempt) {
      std::vector<int> set;
      int guard = 0;
      while (static_cast<int>(set.size()) < size && ++guard < 4000) {
        int v = static_cast<int>(rng() % static_cast<unsigned>(total));
        bool ok = true;
        for (int u : set)
          if (popcount_distance(u, v) < std::max(floor_, 1)) ok = false;
        if (ok) set.push_back(v);
      }
      if (static_cast<int>(set.size()) < size) break;  // floor unreachable
      std::sort(set.begin(), set.end());
      TwoColoring vcol;
      vcol.mode = ColorMode::vertex;
      vcol.red_vertices = set;
      if (!is_distinguishing(pg.graph, vcol)) continue;
      for (bool stagger : {false, true})
        for (int rot = 0; rot < n; ++rot) {
          TwoColoring col = class_edge_pairs(set, n, rot, stagger);
          if (static_cast<int>(col.red_edges.size()) != 2 * size) continue;
          if (is_distinguishing(pg.graph, col)) {
            Construction out{"Q" + std::to_string(n), std::move(pg), std::move(col), true};
            return out;
          }
        }
    }
  }
  throw budget_exhausted("no verified distinguishing-class edge pairs found for Q" +
                         std::to_string(n));
}

Construction kn_power_coloring(int n, int k, const TreeCatalog& cat) {
  if (n < 6) throw std::invalid_argument("needs n >= 6 (two edge colors below that)");
  if (k < 1) throw std::invalid_argument("power must be positive");
  if (k > n + 1) throw std::invalid_argument("needs k <= n+1");
  double size = 1;
  for (int i = 0; i < k; ++i) size *= n;
  if (size > 2000) throw std::invalid_argument("product too large for desk-scale verification");
  std::vector<Graph> factors(k, generate(Family::complete, n));
  ProductGraph pg = cartesian_product(factors);
  TwoColoring base = kn_edge_witness(n, cat);
  TwoColoring col;
  col.mode = ColorMode::edge;
  for (int t = 0; t < k; ++t) {
    // Layer of factor t anchored at first coordinate t, zeros elsewhere.
    std::vector<int> anchor(k, 0);
    anchor[0] = t < n ? t : n - 1;
    int anchor_vertex = pg.vertex_at(anchor);
    for (const auto& [a, b] : base.red_edges) {
      int u = pg.with_coord(anchor_vertex, t, a);
      int v = pg.with_coord(anchor_vertex, t, b);
      col.red_edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  return finish(power_spec('K', n, k), std::move(pg), std::move(col));
}

}  // namespace symbreak
