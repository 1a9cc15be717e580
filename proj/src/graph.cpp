#include "symbreak/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symbreak {

namespace {

Edge normalized(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

Graph::Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order_ < 1) throw std::invalid_argument("graph order must be at least 1");
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first == e.second)
      throw std::invalid_argument("loop edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ") rejected");
    if (e.first < 0 || e.second >= order_)
      throw std::invalid_argument("edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ") out of range for order " +
                                  std::to_string(order_));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adj_.assign(order_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  if (u == v) return -1;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), normalized(u, v));
  if (it == edges_.end() || *it != normalized(u, v)) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::connected() const {
  auto d = distances_from(0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

std::vector<int> Graph::distances_from(int src) const {
  std::vector<int> dist(order_, -1);
  std::vector<int> queue;
  dist[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : adj_[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const auto& [u, v] : edges_) es.push_back(normalized(perm[u], perm[v]));
  return Graph(order_, std::move(es));
}

std::string to_string(ColorMode mode) {
  switch (mode) {
    case ColorMode::vertex: return "vertex";
    case ColorMode::edge: return "edge";
    case ColorMode::total: return "total";
  }
  return "?";
}

ColorMode color_mode_from_string(const std::string& s) {
  if (s == "vertex") return ColorMode::vertex;
  if (s == "edge") return ColorMode::edge;
  if (s == "total") return ColorMode::total;
  throw std::invalid_argument("unknown color mode '" + s + "'");
}

void TwoColoring::check_hosted(const Graph& g) const {
  for (int v : red_vertices)
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("red vertex " + std::to_string(v) + " not in host graph");
  for (const auto& [u, v] : red_edges)
    if (!g.has_edge(u, v))
      throw std::invalid_argument("red edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") not in host graph");
  if (mode == ColorMode::vertex && !red_edges.empty())
    throw std::invalid_argument("vertex-mode coloring must not carry red edges");
  if (mode == ColorMode::edge && !red_vertices.empty())
    throw std::invalid_argument("edge-mode coloring must not carry red vertices");
}

void TwoColoring::normalize() {
  std::sort(red_vertices.begin(), red_vertices.end());
  red_vertices.erase(std::unique(red_vertices.begin(), red_vertices.end()), red_vertices.end());
  for (auto& e : red_edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(red_edges.begin(), red_edges.end());
  red_edges.erase(std::unique(red_edges.begin(), red_edges.end()), red_edges.end());
}

Graph build_graph(int order, const std::vector<Edge>& edge_list) {
  return Graph(order, edge_list);
}

Graph generate(Family family, int parameter) {
  std::vector<Edge> es;
  switch (family) {
    case Family::path:
      if (parameter < 1) throw std::invalid_argument("path needs n >= 1");
      for (int i = 0; i + 1 < parameter; ++i) es.push_back({i, i + 1});
      return Graph(parameter, std::move(es));
    case Family::cycle:
      if (parameter < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int i = 0; i < parameter; ++i) es.push_back({i, (i + 1) % parameter});
      return Graph(parameter, std::move(es));
    case Family::complete:
      if (parameter < 1) throw std::invalid_argument("complete graph needs n >= 1");
      for (int i = 0; i < parameter; ++i)
        for (int j = i + 1; j < parameter; ++j) es.push_back({i, j});
      return Graph(parameter, std::move(es));
    case Family::hypercube: {
      if (parameter < 1) throw std::invalid_argument("hypercube needs k >= 1");
      if (parameter > 20) throw std::invalid_argument("hypercube dimension too large");
      int n = 1 << parameter;
      for (int v = 0; v < n; ++v)
        for (int b = 0; b < parameter; ++b) {
          int w = v ^ (1 << b);
          if (v < w) es.push_back({v, w});
        }
      return Graph(n, std::move(es));
    }
  }
  throw std::invalid_argument("unknown family");
}

Graph generate(const std::string& family, int parameter) {
  if (family == "path") return generate(Family::path, parameter);
  if (family == "cycle") return generate(Family::cycle, parameter);
  if (family == "complete") return generate(Family::complete, parameter);
  if (family == "hypercube") return generate(Family::hypercube, parameter);
  throw std::invalid_argument("unknown family '" + family + "'");
}

namespace {

constexpr int kG6Bias = 63;

void append_g6_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Bias));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Bias));
  } else {
    throw std::invalid_argument("graph too large for graph6 output");
  }
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  std::string out;
  int n = g.order();
  append_g6_order(out, n);
  int nbits = n * (n - 1) / 2;
  int acc = 0, filled = 0;
  // Column-major upper triangle: bit (i,j) for j = 1..n-1, i = 0..j-1.
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Bias));
        acc = 0;
        filled = 0;
      }
    }
  if (nbits % 6 != 0) {
    acc <<= (6 - nbits % 6);
    out.push_back(static_cast<char>(acc + kG6Bias));
  }
  return out;
}

Graph parse_graph6(const std::string& text) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > text.size())
      throw std::invalid_argument("graph6: truncated input at byte " + std::to_string(pos));
  };
  auto decode = [&](std::size_t at) {
    int c = static_cast<unsigned char>(text[at]);
    if (c < kG6Bias || c > 126)
      throw std::invalid_argument("graph6: invalid byte at offset " + std::to_string(at));
    return c - kG6Bias;
  };
  need(1);
  long long n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    need(4);
    n = (static_cast<long long>(decode(1)) << 12) | (decode(2) << 6) | decode(3);
    pos = 4;
  } else {
    n = decode(0);
    pos = 1;
  }
  if (n < 1) throw std::invalid_argument("graph6: order must be at least 1");
  long long nbits = n * (n - 1) / 2;
  std::size_t payload = static_cast<std::size_t>((nbits + 5) / 6);
  need(payload);
  if (text.size() != pos + payload)
    throw std::invalid_argument("graph6: trailing bytes at offset " + std::to_string(pos + payload));
  std::vector<bool> bits;
  bits.reserve(payload * 6);
  for (std::size_t k = 0; k < payload; ++k) {
    int word = decode(pos + k);
    for (int b = 5; b >= 0; --b) bits.push_back((word >> b) & 1);
  }
  for (long long t = nbits; t < static_cast<long long>(bits.size()); ++t)
    if (bits[t])
      throw std::invalid_argument("graph6: nonzero padding bits at offset " +
                                  std::to_string(pos + payload - 1));
  std::vector<Edge> es;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (bits[bit]) es.push_back({i, j});
  return Graph(static_cast<int>(n), std::move(es));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing order line");
  std::vector<Edge> es;
  int u, v;
  while (in >> u >> v) es.push_back({u, v});
  if (!in.eof()) throw std::invalid_argument("edge list: malformed edge line");
  return Graph(n, std::move(es));
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string emit_dot(const Graph& g, const std::optional<TwoColoring>& coloring) {
  std::set<int> red_v;
  std::set<Edge> red_e;
  if (coloring) {
    coloring->check_hosted(g);
    red_v.insert(coloring->red_vertices.begin(), coloring->red_vertices.end());
    red_e.insert(coloring->red_edges.begin(), coloring->red_edges.end());
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (red_v.count(v)) out << " [color=red, style=filled, fillcolor=red]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.first << " -- " << e.second;
    if (red_e.count(e)) out << " [color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace symbreak
