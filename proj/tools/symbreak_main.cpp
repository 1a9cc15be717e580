// Command-line front end. Every subcommand is a thin adapter around the
// library; output is JSON unless a text format is asked for.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 usage or input error, 3 search budget exhausted.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "symbreak/serialize.hpp"
#include "symbreak/symmetry.hpp"

namespace sb = symbreak;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GraphInput {
  std::string spec;
  std::string g6;
  std::string edges_file;

  void add_options(CLI::App* cmd, bool required = true) {
    auto* a = cmd->add_option("--graph", spec, "graph spec, e.g. Q4, C5*C6, P5^3, K7");
    auto* b = cmd->add_option("--g6", g6, "graph6 string");
    auto* c = cmd->add_option("--edges-file", edges_file, "edge-list file (order, then 'u v' lines)");
    a->excludes(b)->excludes(c);
    b->excludes(c);
    if (required) cmd->require_option(1, 3);
  }

  bool is_spec() const { return !spec.empty(); }

  sb::Graph load() const {
    if (!spec.empty()) return sb::parse_graph_spec(spec).graph;
    if (!g6.empty()) return sb::parse_graph6(g6);
    if (!edges_file.empty()) {
      std::ifstream in(edges_file);
      if (!in) throw std::invalid_argument("cannot open " + edges_file);
      std::stringstream buf;
      buf << in.rdbuf();
      return sb::parse_edge_list(buf.str());
    }
    throw std::invalid_argument("no graph given");
  }

  std::string label() const {
    if (!spec.empty()) return spec;
    if (!g6.empty()) return g6;
    return edges_file;
  }
};

// Vertex literal: plain index, a digit tuple matching the factor count
// (e.g. "011" on Q3), or dot-separated coordinates ("0.11.3").
int parse_vertex(const std::string& tok, const std::optional<sb::ProductGraph>& pg) {
  if (pg && tok.find('.') != std::string::npos) {
    std::vector<int> coords;
    std::stringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, '.')) coords.push_back(std::stoi(part));
    return pg->vertex_at(coords);
  }
  if (pg && static_cast<int>(tok.size()) == pg->factor_count() && pg->factor_count() > 1 &&
      std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(c); })) {
    std::vector<int> coords;
    for (char c : tok) coords.push_back(c - '0');
    return pg->vertex_at(coords);
  }
  return std::stoi(tok);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep))
    if (!part.empty()) out.push_back(part);
  return out;
}

struct ColoringInput {
  std::string mode = "edge";
  std::string red_edges;
  std::string red_vertices;
  std::string file;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "vertex, edge or total")->default_str("edge");
    cmd->add_option("--red", red_edges, "red edges, e.g. \"000-100,100-110\" or \"0-4,4-6\"");
    cmd->add_option("--red-vertices", red_vertices, "red vertices, e.g. \"0,5\" or \"000,110\"");
    cmd->add_option("--coloring-file", file, "coloring JSON file");
  }

  sb::TwoColoring load(const std::optional<sb::ProductGraph>& pg) const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open " + file);
      return sb::coloring_from_json(sb::json::parse(in));
    }
    sb::TwoColoring col;
    col.mode = sb::color_mode_from_string(mode);
    for (const auto& tok : split(red_vertices, ','))
      col.red_vertices.push_back(parse_vertex(tok, pg));
    for (const auto& tok : split(red_edges, ',')) {
      auto ends = split(tok, '-');
      if (ends.size() != 2) throw std::invalid_argument("bad edge literal '" + tok + "'");
      col.red_edges.push_back({parse_vertex(ends[0], pg), parse_vertex(ends[1], pg)});
    }
    for (auto& e : col.red_edges)
      if (e.first > e.second) std::swap(e.first, e.second);
    col.normalize();
    return col;
  }
};

std::optional<sb::ProductGraph> product_of(const GraphInput& gi) {
  if (!gi.is_spec()) return std::nullopt;
  return sb::product_from_spec(gi.spec);
}

void print_json(const sb::json& j) { std::cout << j.dump(2) << "\n"; }

int default_workers() {
  if (const char* env = std::getenv("SYMBREAK_WORKERS")) return std::max(1, std::atoi(env));
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph symmetry-breaking toolkit"};
  app.require_subcommand(1);

  // ---- aut ----------------------------------------------------------------
  auto* aut = app.add_subcommand("aut", "automorphism group of a (colored) graph");
  GraphInput aut_g;
  ColoringInput aut_c;
  aut_g.add_options(aut);
  aut_c.add_options(aut);
  std::uint64_t aut_budget = sb::EngineOptions{}.node_budget;
  aut->add_option("--budget", aut_budget, "search node budget");

  // ---- check --------------------------------------------------------------
  auto* check = app.add_subcommand("check", "is the coloring distinguishing?");
  GraphInput check_g;
  ColoringInput check_c;
  check_g.add_options(check);
  check_c.add_options(check);

  // ---- cert ---------------------------------------------------------------
  auto* cert = app.add_subcommand("cert", "canonical certificate (hex)");
  GraphInput cert_g;
  ColoringInput cert_c;
  cert_g.add_options(cert);
  cert_c.add_options(cert);

  // ---- trees --------------------------------------------------------------
  auto* trees = app.add_subcommand("trees", "free or asymmetric trees of an order");
  int trees_n = 7;
  bool trees_asym = false;
  std::string trees_format = "g6";
  trees->add_option("--n", trees_n, "number of vertices")->required();
  trees->add_flag("--asymmetric", trees_asym, "only asymmetric trees");
  trees->add_option("--format", trees_format, "g6 or json");

  // ---- catalog ------------------------------------------------------------
  auto* catalog = app.add_subcommand("catalog", "asymmetric tree catalog as JSON");
  int catalog_depth = 12;
  catalog->add_option("--depth", catalog_depth, "maximum tree order");

  // ---- kn-cost ------------------------------------------------------------
  auto* kncost = app.add_subcommand("kn-cost", "edge cost of K_n with its parameters");
  int kncost_n = 0;
  int kncost_depth = 12;
  kncost->add_option("--n", kncost_n, "order of the complete graph")->required();
  kncost->add_option("--depth", kncost_depth, "catalog depth");

  // ---- kn-table -----------------------------------------------------------
  auto* kntable = app.add_subcommand("kn-table", "table of K_n edge costs");
  int kt_from = 6, kt_to = 630, kt_depth = 12, kt_workers = default_workers();
  std::string kt_format = "csv";
  kntable->add_option("--from", kt_from, "first n");
  kntable->add_option("--to", kt_to, "last n");
  kntable->add_option("--depth", kt_depth, "catalog depth");
  kntable->add_option("--format", kt_format, "csv or runs");
  kntable->add_option("--workers", kt_workers, "parallel workers");

  // ---- procedure1 ---------------------------------------------------------
  auto* proc = app.add_subcommand("procedure1", "asymmetric red forest of K_n");
  int proc_n = 0, proc_depth = 16;
  std::string proc_format = "json";
  proc->add_option("--n", proc_n, "order of the complete graph")->required();
  proc->add_option("--depth", proc_depth, "catalog depth");
  proc->add_option("--format", proc_format, "json or dot");

  // ---- product ------------------------------------------------------------
  auto* product = app.add_subcommand("product", "build a product graph from a spec");
  std::string product_spec_str;
  std::string product_format = "json";
  product->add_option("--spec", product_spec_str, "graph spec")->required();
  product->add_option("--format", product_format, "json, g6, edges or dot");

  // ---- factorize ----------------------------------------------------------
  auto* fact = app.add_subcommand("factorize", "prime factor decomposition");
  GraphInput fact_g;
  fact_g.add_options(fact);

  // ---- reduced-factor -----------------------------------------------------
  auto* rf = app.add_subcommand("reduced-factor", "certificate classes of a reduced factor");
  GraphInput rf_g;
  ColoringInput rf_c;
  int rf_i = 0;
  rf_g.add_options(rf);
  rf_c.add_options(rf);
  rf->add_option("--i", rf_i, "factor index")->required();

  // ---- aul ----------------------------------------------------------------
  auto* aul = app.add_subcommand("aul", "sufficient-condition verdict for a product coloring");
  GraphInput aul_g;
  ColoringInput aul_c;
  aul_g.add_options(aul);
  aul_c.add_options(aul);

  // ---- construct ----------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "a verified coloring from the library");
  std::string con_family;
  int con_n = 0, con_k = 0, con_depth = 12;
  std::string con_mode = "edge", con_orders;
  construct
      ->add_option("--family", con_family,
                   "path-power | path-product | cycle-power | cycle-product | "
                   "small-hypercube | hypercube-det | hypercube-class | kn-power")
      ->required();
  construct->add_option("--n", con_n, "order parameter");
  construct->add_option("--k", con_k, "power / dimension parameter");
  construct->add_option("--orders", con_orders, "comma-separated factor orders");
  construct->add_option("--mode", con_mode, "vertex or edge");
  construct->add_option("--depth", con_depth, "catalog depth (kn-power)");

  // ---- cost ---------------------------------------------------------------
  auto* cost = app.add_subcommand("cost", "exact minimum red class by exhaustive search");
  GraphInput cost_g;
  cost_g.add_options(cost);
  std::string cost_mode = "edge";
  int cost_max = -1, cost_workers = default_workers();
  std::uint64_t cost_checks = UINT64_MAX;
  std::string cost_checkpoint;
  cost->add_option("--mode", cost_mode, "vertex or edge");
  cost->add_option("--max-size", cost_max, "largest red class to try");
  cost->add_option("--workers", cost_workers, "parallel workers");
  cost->add_option("--max-checks", cost_checks, "budget: distinguishing checks");
  cost->add_option("--checkpoint", cost_checkpoint, "resumable checkpoint file");

  // ---- det-set ------------------------------------------------------------
  auto* det = app.add_subcommand("det-set", "minimum determining set / sized exhibit");
  GraphInput det_g;
  det_g.add_options(det);
  int det_size = -1, det_floor = -1;
  det->add_option("--size", det_size, "exhibit a set of this size (upper bound only)");
  det->add_option("--distance-floor", det_floor, "pairwise distance floor");

  // ---- render -------------------------------------------------------------
  auto* render = app.add_subcommand("render", "DOT output of a (colored) graph");
  GraphInput render_g;
  ColoringInput render_c;
  render_g.add_options(render);
  render_c.add_options(render);

  CLI11_PARSE(app, argc, argv);

  try {
    if (aut->parsed()) {
      sb::Graph g = aut_g.load();
      auto pg = product_of(aut_g);
      sb::TwoColoring col = aut_c.load(pg);
      sb::EngineOptions opts;
      opts.node_budget = aut_budget;
      sb::AutGroup grp = automorphism_group(colored_view(g, col), opts);
      sb::json gens = sb::json::array();
      for (const auto& p : grp.generators) gens.push_back(sb::permutation_to_json(p));
      print_json({{"graph", aut_g.label()},
                  {"order", grp.order},
                  {"degree", grp.degree},
                  {"generators", gens}});
      return kExitOk;
    }
    if (check->parsed()) {
      sb::Graph g = check_g.load();
      auto pg = product_of(check_g);
      sb::TwoColoring col = check_c.load(pg);
      bool ok = sb::is_distinguishing(g, col);
      print_json({{"graph", check_g.label()},
                  {"coloring", sb::coloring_to_json(col)},
                  {"distinguishing", ok}});
      return ok ? kExitOk : kExitNegative;
    }
    if (cert->parsed()) {
      sb::Graph g = cert_g.load();
      auto pg = product_of(cert_g);
      sb::TwoColoring col = cert_c.load(pg);
      auto c = sb::canonical_certificate(colored_view(g, col));
      print_json({{"graph", cert_g.label()}, {"cert", sb::cert_hex(c)}});
      return kExitOk;
    }
    if (trees->parsed()) {
      auto list = trees_asym ? sb::enumerate_asymmetric_trees(trees_n)
                             : sb::enumerate_trees(trees_n);
      if (trees_format == "json") {
        sb::json arr = sb::json::array();
        for (const auto& t : list) arr.push_back(sb::emit_graph6(t));
        print_json({{"n", trees_n}, {"count", list.size()}, {"trees", arr}});
      } else {
        for (const auto& t : list) std::cout << sb::emit_graph6(t) << "\n";
      }
      return kExitOk;
    }
    if (catalog->parsed()) {
      print_json(sb::catalog_to_json(sb::shared_catalog(catalog_depth)));
      return kExitOk;
    }
    if (kncost->parsed()) {
      const auto& cat = sb::shared_catalog(kncost_depth);
      sb::json j{{"n", kncost_n}, {"rho_prime", sb::rho_prime_kn(kncost_n, cat)}};
      if (kncost_n >= 8) j["params"] = sb::quintas_to_json(sb::quintas_params(kncost_n, cat));
      print_json(j);
      return kExitOk;
    }
    if (kntable->parsed()) {
      const auto& cat = sb::shared_catalog(kt_depth);
      auto rows = sb::kn_table(kt_from, kt_to, cat, kt_workers);
      if (kt_format == "runs")
        std::cout << sb::render_run_length(sb::run_length_rows(rows));
      else
        std::cout << sb::render_csv(rows);
      return kExitOk;
    }
    if (proc->parsed()) {
      const auto& cat = sb::shared_catalog(proc_depth);
      auto cover = sb::procedure1(proc_n, cat);
      if (proc_format == "dot") {
        sb::TwoColoring col;
        col.mode = sb::ColorMode::edge;
        col.red_edges = cover.red_edges;
        std::cout << sb::emit_dot(sb::generate(sb::Family::complete, proc_n), col);
      } else {
        print_json(sb::forest_to_json(cover));
      }
      return kExitOk;
    }
    if (product->parsed()) {
      auto parsed = sb::parse_graph_spec(product_spec_str);
      if (product_format == "g6") {
        std::cout << sb::emit_graph6(parsed.graph) << "\n";
      } else if (product_format == "edges") {
        std::cout << sb::emit_edge_list(parsed.graph);
      } else if (product_format == "dot") {
        std::cout << sb::emit_dot(parsed.graph);
      } else {
        sb::json factors = sb::json::array();
        for (const auto& f : parsed.factors) factors.push_back(sb::emit_graph6(f));
        print_json({{"spec", parsed.text},
                    {"order", parsed.graph.order()},
                    {"edges", parsed.graph.edge_count()},
                    {"graph6", sb::emit_graph6(parsed.graph)},
                    {"factors", factors}});
      }
      return kExitOk;
    }
    if (fact->parsed()) {
      sb::Graph g = fact_g.load();
      bool prime = false;
      auto factors = sb::factorize(g, &prime);
      sb::json arr = sb::json::array();
      for (const auto& f : factors)
        arr.push_back(sb::json{{"order", f.order()}, {"graph6", sb::emit_graph6(f)}});
      print_json({{"graph", fact_g.label()},
                  {"prime_within_scope", prime},
                  {"factors", arr}});
      return kExitOk;
    }
    if (rf->parsed()) {
      if (!rf_g.is_spec()) throw std::invalid_argument("reduced-factor needs --graph spec");
      auto pg = sb::product_from_spec(rf_g.spec);
      sb::TwoColoring col = rf_c.load(pg);
      auto reduced = sb::reduced_factor_coloring(pg, col, rf_i);
      // Dense ids in first-seen order keep the output readable.
      std::map<std::vector<std::uint8_t>, int> ids;
      auto id_of = [&ids](const sb::CanonicalCert& c) {
        auto [it, fresh] = ids.emplace(c.bytes, static_cast<int>(ids.size()));
        return it->second;
      };
      sb::json vclasses = sb::json::array(), eclasses = sb::json::array();
      for (const auto& c : reduced.vertex_color) vclasses.push_back(id_of(c));
      for (const auto& c : reduced.edge_color) eclasses.push_back(id_of(c));
      print_json({{"graph", rf_g.spec},
                  {"factor_index", rf_i},
                  {"factor_graph6", sb::emit_graph6(reduced.factor)},
                  {"vertex_classes", vclasses},
                  {"edge_classes", eclasses}});
      return kExitOk;
    }
    if (aul->parsed()) {
      if (!aul_g.is_spec()) throw std::invalid_argument("aul needs --graph spec");
      auto pg = sb::product_from_spec(aul_g.spec);
      sb::TwoColoring col = aul_c.load(pg);
      auto verdict = sb::aul_check(pg, col);
      sb::json j = sb::verdict_to_json(verdict);
      if (!verdict.satisfied) j["note"] = "inconclusive - falling back to exact check is advised";
      print_json(j);
      return verdict.satisfied ? kExitOk : kExitNegative;
    }
    if (construct->parsed()) {
      std::vector<int> orders;
      for (const auto& tok : split(con_orders, ',')) orders.push_back(std::stoi(tok));
      sb::ColorMode mode = sb::color_mode_from_string(con_mode);
      sb::Construction c = [&]() {
        if (con_family == "path-power") return sb::path_power_coloring(con_n, con_k, mode);
        if (con_family == "path-product") return sb::path_product_coloring(orders, mode);
        if (con_family == "cycle-power") return sb::cycle_power_coloring(con_n, con_k, mode);
        if (con_family == "cycle-product") return sb::cycle_product_coloring(orders, mode);
        if (con_family == "small-hypercube") return sb::small_hypercube_coloring(con_k);
        if (con_family == "hypercube-det") return sb::hypercube_det_coloring(con_n);
        if (con_family == "hypercube-class") return sb::hypercube_class_coloring(con_n);
        if (con_family == "kn-power")
          return sb::kn_power_coloring(con_n, con_k, sb::shared_catalog(con_depth));
        throw std::invalid_argument("unknown construction family '" + con_family + "'");
      }();
      print_json(sb::construction_to_json(c));
      return kExitOk;
    }
    if (cost->parsed()) {
      sb::Graph g = cost_g.load();
      auto pg = product_of(cost_g);
      sb::ColorMode mode = sb::color_mode_from_string(cost_mode);
      std::optional<sb::AutGroup> hint;
      if (pg && pg->factor_count() >= 2) hint = sb::product_automorphism_group(*pg);
      int min_size = 1;
      if (!cost_checkpoint.empty()) {
        std::ifstream in(cost_checkpoint);
        if (in) {
          auto j = sb::json::parse(in, nullptr, false);
          if (!j.is_discarded() && j.value("graph", "") == cost_g.label() &&
              j.value("mode", "") == cost_mode)
            min_size = j.value("last_completed_size", 0) + 1;
        }
      }
      sb::SearchBudget budget;
      budget.max_checks = cost_checks;
      budget.workers = cost_workers;
      auto result =
          sb::exact_cost(g, mode, cost_max, budget, hint ? &*hint : nullptr, {}, min_size);
      result.graph_spec = cost_g.label();
      if (!cost_checkpoint.empty()) {
        std::ofstream out(cost_checkpoint);
        out << sb::json{{"graph", cost_g.label()},
                        {"mode", cost_mode},
                        {"last_completed_size", result.last_completed_size},
                        {"found", result.found}}
                   .dump(2);
      }
      print_json(sb::cost_result_to_json(result));
      if (result.budget_exhausted) return kExitBudget;
      return result.found ? kExitOk : kExitNegative;
    }
    if (det->parsed()) {
      sb::Graph g = det_g.load();
      std::optional<int> floor;
      if (det_floor >= 0) floor = det_floor;
      if (det_size < 0) {
        auto set = sb::min_determining_set(g, floor);
        print_json({{"graph", det_g.label()},
                    {"set", set},
                    {"size", set.size()},
                    {"minimum", true}});
        return kExitOk;
      }
      // Sized exhibit: first lexicographic set of the requested size with a
      // trivial pointwise stabilizer (upper bound only).
      std::vector<std::vector<int>> dist;
      if (floor)
        for (int v = 0; v < g.order(); ++v) dist.push_back(g.distances_from(v));
      std::vector<int> subset, found;
      std::function<bool(int)> rec = [&](int next) {
        if (static_cast<int>(subset.size()) == det_size) {
          if (sb::is_determining_set(g, subset)) {
            found = subset;
            return false;
          }
          return true;
        }
        for (int v = next; v < g.order(); ++v) {
          bool ok = true;
          if (floor)
            for (int u : subset)
              if (dist[u][v] < *floor) ok = false;
          if (!ok) continue;
          subset.push_back(v);
          bool keep_going = rec(v + 1);
          subset.pop_back();
          if (!keep_going) return false;
        }
        return true;
      };
      rec(0);
      if (found.empty()) {
        print_json({{"graph", det_g.label()}, {"size", det_size}, {"found", false}});
        return kExitNegative;
      }
      print_json({{"graph", det_g.label()},
                  {"set", found},
                  {"size", found.size()},
                  {"minimum", false},
                  {"note", "upper bound only"}});
      return kExitOk;
    }
    if (render->parsed()) {
      sb::Graph g = render_g.load();
      auto pg = product_of(render_g);
      sb::TwoColoring col = render_c.load(pg);
      std::cout << sb::emit_dot(g, col);
      return kExitOk;
    }
  } catch (const sb::budget_exhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
