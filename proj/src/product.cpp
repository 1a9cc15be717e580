#include "symbreak/product.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace symbreak {

std::vector<int> ProductGraph::coords(int v) const {
  std::vector<int> c(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) c[i] = coord(v, static_cast<int>(i));
  return c;
}

int ProductGraph::vertex_at(const std::vector<int>& coords) const {
  if (coords.size() != factors.size()) throw std::invalid_argument("coordinate arity mismatch");
  int v = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= factors[i].order())
      throw std::invalid_argument("coordinate out of range");
    v += coords[i] * strides[i];
  }
  return v;
}

int ProductGraph::with_coord(int v, int i, int j) const {
  return v + (j - coord(v, i)) * strides[i];
}

namespace {

ProductGraph assemble_product(const std::vector<Graph>& factors) {
  ProductGraph pg;
  pg.factors = factors;
  pg.strides.resize(factors.size());
  long long n = 1;
  for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
    pg.strides[i] = static_cast<int>(n);
    n *= factors[i].order();
    if (n > 1'000'000) throw std::invalid_argument("product too large");
  }
  std::vector<Edge> es;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    int stride = pg.strides[i];
    long long copies = n / factors[i].order();
    for (const auto& [a, b] : factors[i].edges()) {
      // Iterate all assignments of the remaining coordinates.
      for (long long rest = 0; rest < copies; ++rest) {
        // Unrank `rest` into the other coordinates around position i.
        long long hi = rest / (stride ? stride : 1);
        long long lo = rest % (stride ? stride : 1);
        long long base = hi * static_cast<long long>(stride) * factors[i].order() + lo;
        es.push_back({static_cast<int>(base + static_cast<long long>(a) * stride),
                      static_cast<int>(base + static_cast<long long>(b) * stride)});
      }
    }
  }
  pg.graph = Graph(static_cast<int>(n), std::move(es));
  return pg;
}

// Edge classes of the product relation: adjacent edges sharing a triangle or
// lacking a unique chordless square are mates; a unique chordless square also
// mates each edge with its opposite side.
std::vector<int> square_edge_classes(const Graph& g) {
  int m = g.edge_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int u = 0; u < g.order(); ++u) {
    const auto& nb = g.neighbors(u);
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        int v = nb[x], w = nb[y];
        int e = g.edge_index(u, v), f = g.edge_index(u, w);
        if (g.has_edge(v, w)) {
          unite(e, f);
          continue;
        }
        int square_x = -1, squares = 0;
        for (int z : g.neighbors(v)) {
          if (z == u || !g.has_edge(z, w)) continue;
          if (g.has_edge(u, z)) {
            squares = 2;  // chorded square: treat as ambiguous, same class
            break;
          }
          ++squares;
          square_x = z;
        }
        if (squares == 1) {
          unite(e, g.edge_index(w, square_x));
          unite(f, g.edge_index(v, square_x));
        } else {
          unite(e, f);
        }
      }
  }
  std::vector<int> cls(m);
  for (int e = 0; e < m; ++e) cls[e] = find(e);
  return cls;
}

// Connected component of vertex 0 in the subgraph of one edge class,
// relabeled 0..k-1 in BFS discovery order.
Graph class_component(const Graph& g, const std::vector<int>& cls, int wanted) {
  std::vector<int> label(g.order(), -1);
  std::vector<int> queue = {0};
  label[0] = 0;
  int next = 1;
  std::vector<Edge> es;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (cls[g.edge_index(u, w)] != wanted) continue;
      if (label[w] < 0) {
        label[w] = next++;
        queue.push_back(w);
      }
      if (label[u] < label[w]) es.push_back({label[u], label[w]});
    }
  }
  return Graph(next, std::move(es));
}

}  // namespace

ProductGraph cartesian_product(const std::vector<Graph>& factors) {
  if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
  for (const auto& f : factors) {
    if (f.order() < 2) throw std::invalid_argument("product factors must have order >= 2");
    if (!f.connected()) throw std::invalid_argument("disconnected factor rejected");
    if (f.order() <= 8) {
      bool prime = false;
      auto parts = factorize(f, &prime);
      if (parts.size() > 1)
        throw std::invalid_argument("non-prime factor of order " + std::to_string(f.order()) +
                                    " rejected (it splits into " + std::to_string(parts.size()) +
                                    " factors)");
    }
  }
  return assemble_product(factors);
}

std::pair<Graph, std::vector<int>> layer(const ProductGraph& pg, int i, int v) {
  if (i < 0 || i >= pg.factor_count()) throw std::invalid_argument("factor index out of range");
  if (v < 0 || v >= pg.graph.order()) throw std::invalid_argument("vertex out of range");
  const Graph& factor = pg.factors[i];
  std::vector<int> embed(factor.order());
  for (int j = 0; j < factor.order(); ++j) embed[j] = pg.with_coord(v, i, j);
  return {factor, embed};
}

ProductGraph quotient(const ProductGraph& pg, int i) {
  if (pg.factor_count() < 2) throw std::invalid_argument("quotient needs at least two factors");
  if (i < 0 || i >= pg.factor_count()) throw std::invalid_argument("factor index out of range");
  std::vector<Graph> rest;
  for (int t = 0; t < pg.factor_count(); ++t)
    if (t != i) rest.push_back(pg.factors[t]);
  return assemble_product(rest);
}

int quotient_vertex_in_product(const ProductGraph& pg, int i, int j, int x) {
  // Unrank x over the non-i coordinates (row-major), then insert j at i.
  std::vector<int> coords(pg.factor_count());
  int rest = x;
  for (int t = pg.factor_count() - 1; t >= 0; --t) {
    if (t == i) continue;
    coords[t] = rest % pg.factors[t].order();
    rest /= pg.factors[t].order();
  }
  coords[i] = j;
  return pg.vertex_at(coords);
}

std::vector<Graph> factorize(const Graph& g, bool* prime_within_scope) {
  if (!g.connected()) throw std::invalid_argument("factorization needs a connected graph");
  if (prime_within_scope) *prime_within_scope = false;
  if (g.order() < 2 || g.edge_count() == 0) {
    if (prime_within_scope) *prime_within_scope = true;
    return {g};
  }
  auto cls = square_edge_classes(g);
  std::vector<int> roots(cls);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (roots.size() == 1) {
    if (prime_within_scope) *prime_within_scope = true;
    return {g};
  }
  std::vector<Graph> candidates;
  long long order_product = 1;
  for (int root : roots) {
    candidates.push_back(class_component(g, cls, root));
    order_product *= candidates.back().order();
  }
  auto fail_prime = [&]() -> std::vector<Graph> {
    if (prime_within_scope) *prime_within_scope = true;
    return {g};
  };
  if (order_product != g.order()) return fail_prime();
  // A candidate may itself split further.
  std::vector<Graph> primes;
  for (const auto& c : candidates) {
    bool sub_prime = false;
    auto parts = factorize(c, &sub_prime);
    for (auto& part : parts) primes.push_back(std::move(part));
  }
  std::sort(primes.begin(), primes.end(), [](const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return canonical_certificate(a).bytes < canonical_certificate(b).bytes;
  });
  ProductGraph rebuilt = assemble_product(primes);
  if (!are_isomorphic(rebuilt.graph, g)) return fail_prime();
  return primes;
}

AutGroup product_automorphism_group(const ProductGraph& pg) {
  const int k = pg.factor_count();
  const int n = pg.graph.order();
  AutGroup group;
  group.degree = n;

  std::vector<AutGroup> factor_groups;
  std::vector<CanonicalCert> certs;
  for (const auto& f : pg.factors) {
    factor_groups.push_back(automorphism_group(f));
    certs.push_back(canonical_certificate(f));
  }

  auto lift_factor = [&](int i, const Permutation& fperm) {
    Permutation lifted;
    lifted.images.resize(n);
    for (int v = 0; v < n; ++v) lifted.images[v] = pg.with_coord(v, i, fperm.images[pg.coord(v, i)]);
    return lifted;
  };

  for (int i = 0; i < k; ++i)
    for (const auto& gen : factor_groups[i].generators) group.generators.push_back(lift_factor(i, gen));

  // One swap per adjacent pair of isomorphic factors generates all factor
  // permutations within each isomorphism class.
  for (int i = 0; i + 1 < k; ++i) {
    if (certs[i] != certs[i + 1]) continue;
    std::optional<Permutation> witness;
    if (pg.factors[i] == pg.factors[i + 1])
      witness = Permutation::identity(pg.factors[i].order());
    else
      witness = are_isomorphic(pg.factors[i], pg.factors[i + 1]);
    if (!witness) throw std::logic_error("equal certificates without isomorphism witness");
    Permutation inv = witness->inverse();
    Permutation swap;
    swap.images.resize(n);
    for (int v = 0; v < n; ++v) {
      int a = pg.coord(v, i), b = pg.coord(v, i + 1);
      int u = pg.with_coord(v, i, inv.images[b]);
      swap.images[v] = pg.with_coord(u, i + 1, witness->images[a]);
    }
    group.generators.push_back(std::move(swap));
  }

  unsigned __int128 order = 1;
  for (const auto& fg : factor_groups) order *= fg.order;
  int run = 1;
  for (int i = 1; i <= k; ++i) {
    if (i < k && certs[i] == certs[i - 1]) {
      ++run;
    } else {
      for (int t = 2; t <= run; ++t) order *= t;
      run = 1;
    }
  }
  if (order > static_cast<unsigned __int128>(UINT64_MAX))
    throw std::overflow_error("product group order exceeds 64 bits");
  group.order = static_cast<std::uint64_t>(order);

  std::uint64_t counted = group_order(n, group.generators);
  if (counted != group.order)
    throw std::logic_error("product group order mismatch: counted " + std::to_string(counted) +
                           " vs factor formula " + std::to_string(group.order));
  return group;
}

namespace {

Graph family_graph(char kind, int param) {
  switch (kind) {
    case 'P': return generate(Family::path, param);
    case 'C': return generate(Family::cycle, param);
    case 'K': return generate(Family::complete, param);
    default: throw std::invalid_argument("unknown family letter");
  }
}

}  // namespace

ParsedSpec parse_graph_spec(const std::string& spec) {
  ParsedSpec out;
  out.text = spec;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad graph spec '" + spec + "': " + why + " at position " +
                                std::to_string(pos));
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::stoi(spec.substr(start, pos - start));
  };
  while (true) {
    if (pos >= spec.size()) fail("expected a factor");
    char kind = spec[pos];
    std::vector<Graph> base;
    if (kind == 'P' || kind == 'C' || kind == 'K') {
      ++pos;
      base.push_back(family_graph(kind, read_int()));
    } else if (kind == 'Q') {
      ++pos;
      int dim = read_int();
      if (dim < 1) fail("hypercube dimension must be positive");
      for (int i = 0; i < dim; ++i) base.push_back(generate(Family::complete, 2));
    } else {
      fail("expected P, C, K or Q");
    }
    int power = 1;
    if (pos < spec.size() && spec[pos] == '^') {
      ++pos;
      power = read_int();
      if (power < 1) fail("power must be positive");
    }
    for (int rep = 0; rep < power; ++rep)
      for (const auto& b : base) out.factors.push_back(b);
    if (pos == spec.size()) break;
    if (spec[pos] != '*') fail("expected '*' or end of spec");
    ++pos;
  }
  if (out.factors.size() == 1) {
    out.graph = out.factors[0];
    out.is_product = false;
  } else {
    out.graph = cartesian_product(out.factors).graph;
    out.is_product = true;
  }
  return out;
}

ProductGraph product_from_spec(const std::string& spec) {
  ParsedSpec parsed = parse_graph_spec(spec);
  if (parsed.factors.size() == 1) {
    ProductGraph pg;
    pg.factors = parsed.factors;
    pg.strides = {1};
    pg.graph = parsed.graph;
    return pg;
  }
  return cartesian_product(parsed.factors);
}

}  // namespace symbreak
