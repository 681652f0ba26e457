#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ricci/canonical.hpp"
#include "ricci/classify.hpp"
#include "ricci/constructions.hpp"
#include "ricci/curvature.hpp"
#include "ricci/graph_io.hpp"
#include "ricci/root_lattice.hpp"

namespace ricci::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for results that were computed but came out false.
struct PropertyFalse {
  json report;
};

struct GraphSource {
  std::string path;
  std::string named;
  std::string input_format;

  void add_to(CLI::App* cmd, const std::string& prefix = "") {
    const std::string p = prefix.empty() ? "" : prefix + "-";
    cmd->add_option("--" + p + "graph", path, "graph file (.edges, .json or .dot)");
    cmd->add_option("--" + p + "named", named, "named graph, e.g. petersen, C6, path(50)");
    if (prefix.empty())
      cmd->add_option("--input-format", input_format, "override the format implied by the extension")
          ->check(CLI::IsMember({"edges", "json", "dot"}));
  }

  Graph load() const {
    if (path.empty() == named.empty())
      throw std::invalid_argument("give exactly one of a graph file or a graph name");
    if (!named.empty()) return graph_by_name(named);
    if (input_format.empty()) return load_graph(path);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    return read_graph(in, parse_graph_format(input_format));
  }
};

struct GraphSink {
  std::string path;
  std::string format;

  void add_to(CLI::App* cmd) {
    cmd->add_option("-o,--output", path, "write the graph here instead of standard output");
    cmd->add_option("--format", format, "edges, json or dot")->check(CLI::IsMember({"edges", "json", "dot"}));
  }

  GraphFormat resolved() const {
    if (!format.empty()) return parse_graph_format(format);
    return path.empty() ? GraphFormat::kEdges : format_for_path(path);
  }

  void write(const Graph& g, std::ostream& out) const {
    if (path.empty()) {
      write_graph(out, g, resolved());
    } else {
      save_graph(path, g, resolved());
    }
  }
};

std::string r2s(const Rational& r) { return to_string(r); }

json edge_json(const Graph& g, const Edge& e) { return json{{"u", g.label(e.u)}, {"v", g.label(e.v)}}; }

json vector_json(const IntVector& v) { return json(v); }

Vertex vertex_by_label(const Graph& g, std::int64_t label) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.label(v) == label) return v;
  throw std::invalid_argument("no vertex labelled " + std::to_string(label));
}

json degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.num_vertices(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

json girth_json(const Graph& g) {
  const auto gi = girth(g);
  return gi ? json(*gi) : json("acyclic");
}

LatticeSpec lattice_spec(const std::string& type, const std::string& generators) {
  if (generators.empty() || generators == "full") return full_lattice_spec(type);
  std::vector<std::size_t> indices;
  std::stringstream in(generators);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      indices.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator index: " + tok);
    }
  }
  return lattice_spec_from_indices(type, indices);
}

IntVector simple_coords(const RootSystem& sys, const IntVector& v) {
  const auto c = to_simple_coordinates(sys, v);
  if (!c) throw std::logic_error("vector outside the root lattice");
  return *c;
}

// ---------------------------------------------------------------------------

struct CurvatureCmd {
  GraphSource source;
  bool all = false;
  std::vector<std::int64_t> edge;
  std::string alpha;
  bool check_lemmas = false;
  unsigned jobs = 1;

  void run(std::ostream& out) const {
    const Graph g = source.load();
    std::vector<Edge> edges;
    if (!edge.empty()) {
      if (edge.size() != 2) throw std::invalid_argument("--edge takes two vertex labels");
      const Vertex x = vertex_by_label(g, edge[0]);
      const Vertex y = vertex_by_label(g, edge[1]);
      if (!g.has_edge(x, y)) throw std::invalid_argument("not an edge");
      edges.push_back(Edge(x, y));
    } else {
      edges = g.interior_edges();
    }
    json list = json::array();
    std::vector<std::string> problems;
    if (!alpha.empty()) {
      const Rational a = parse_rational(alpha);
      for (const auto& e : edges) {
        json item = edge_json(g, e);
        item["alpha"] = r2s(a);
        item["kappa_alpha"] = r2s(kappa_alpha(g, e.u, e.v, a));
        list.push_back(std::move(item));
      }
    } else {
      std::vector<CurvatureResult> results;
      if (edge.empty() && jobs > 1) {
        results = edge_curvatures(g, jobs);
      } else {
        for (const auto& e : edges) results.push_back(kappa(g, e.u, e.v, {.cross_check = false}));
      }
      for (const auto& r : results) {
        json item = edge_json(g, r.edge());
        item["kappa"] = r2s(r.kappa);
        item["method"] = to_string(r.method);
        if (check_lemmas) {
          if (const auto f = lemma1_formula(g, r.x, r.y)) {
            item["lemma1"] = r2s(*f);
            if (*f != r.kappa) problems.push_back("closed form disagrees on edge " + item.dump());
          }
          if (const auto b = lemma2_bound(g, r.x, r.y)) {
            item["lemma2_bound"] = r2s(*b);
            if (r.kappa > *b) problems.push_back("upper bound violated on edge " + item.dump());
          }
        }
        list.push_back(std::move(item));
      }
    }
    if (!problems.empty()) {
      json report{{"edges", list}, {"problems", problems}};
      throw PropertyFalse{report};
    }
    out << list.dump(2) << '\n';
  }
};

struct GenerateCmd {
  std::string named;
  GraphSink sink;

  void run(std::ostream& out) const { sink.write(graph_by_name(named), out); }
};

json flatness_json(const Graph& g, const FlatnessReport& r) {
  json report{{"flat", r.flat}, {"edges_checked", r.edges_checked}, {"non_flat", json::array()}};
  for (const auto& [e, k] : r.non_flat) {
    json item = edge_json(g, e);
    item["kappa"] = r2s(k);
    report["non_flat"].push_back(item);
  }
  return report;
}

struct VerifyFlatCmd {
  GraphSource source;
  unsigned jobs = 1;

  void run(std::ostream& out) const {
    const Graph g = source.load();
    const auto report = is_ricci_flat(g, jobs);
    const json j = flatness_json(g, report);
    if (!report.flat) throw PropertyFalse{j};
    out << j.dump(2) << '\n';
  }
};

struct SearchCmd {
  int max_n = 10;
  std::string output_dir;
  unsigned jobs = 1;

  void run(std::ostream& out) const {
    SearchStats stats;
    const auto found = exhaustive_search(max_n, jobs, &stats);
    json summary{{"max_n", max_n}, {"graphs", json::array()}};
    std::map<std::string, int> used;
    for (const auto& g : found) {
      const auto family = theorem1_membership(g);
      std::string name = family == Theorem1Member::kCycle ? "C" + std::to_string(g.num_vertices())
                                                         : std::string(to_string(family));
      if (used[name]++) name += "_" + std::to_string(used[name] - 1);
      json item{{"name", name},
                {"order", g.num_vertices()},
                {"size", g.num_edges()},
                {"degrees", degree_sequence(g)},
                {"girth", girth_json(g)},
                {"family", to_string(family)}};
      if (!output_dir.empty()) {
        std::filesystem::create_directories(output_dir);
        const auto file = std::filesystem::path(output_dir) / (name + ".edges");
        save_graph(file, g, GraphFormat::kEdges);
        item["file"] = file.string();
      }
      summary["graphs"].push_back(item);
    }
    summary["connected_candidates"] = stats.connected;
    out << summary.dump(2) << '\n';
  }
};

struct ProductCmd {
  GraphSource left;
  GraphSource right;
  bool check = false;
  unsigned jobs = 1;
  GraphSink sink;

  void run(std::ostream& out) const {
    const Graph g = left.load();
    const Graph h = right.load();
    if (!check) {
      sink.write(cartesian_product(g, h), out);
      return;
    }
    const auto report = product_curvature_check(g, h, jobs);
    const Graph p = cartesian_product(g, h);
    json j{{"vertices", p.num_vertices()}, {"edges_checked", report.edges.size()}, {"ok", report.ok()},
           {"mismatches", json::array()}};
    std::map<std::pair<bool, std::string>, std::size_t> classes;
    for (const auto& c : report.edges) ++classes[{c.along_first, r2s(c.kappa)}];
    j["by_direction"] = json::array();
    for (const auto& [key, count] : classes)
      j["by_direction"].push_back({{"direction", key.first ? "left" : "right"}, {"kappa", key.second}, {"count", count}});
    for (const auto& c : report.mismatches) {
      json item = edge_json(p, c.edge);
      item["predicted"] = r2s(c.predicted);
      item["kappa"] = r2s(c.kappa);
      j["mismatches"].push_back(item);
    }
    if (!sink.path.empty()) sink.write(p, out);
    if (!report.ok()) throw PropertyFalse{j};
    out << j.dump(2) << '\n';
  }
};

struct CoverCheckCmd {
  GraphSource source;
  GraphSource target;
  std::string map_path;
  bool modular = false;
  bool transfer = false;
  unsigned jobs = 1;

  void run(std::ostream& out) const {
    const Graph g = source.load();
    const Graph h = target.load();
    CoverMap f;
    if (modular == !map_path.empty()) throw std::invalid_argument("give exactly one of --map or --modular");
    if (modular) {
      f = modular_cover(g, h);
    } else {
      f = CoverMap{&g, &h, std::vector<Vertex>(g.num_vertices(), h.num_vertices())};
      std::ifstream in(map_path);
      if (!in) throw std::invalid_argument("cannot read " + map_path);
      std::string line;
      while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::int64_t a = 0;
        std::int64_t b = 0;
        if (!(row >> a)) continue;
        if (!(row >> b)) throw std::invalid_argument("map lines hold two labels: " + line);
        f.mapping[vertex_by_label(g, a)] = vertex_by_label(h, b);
      }
      if (std::count(f.mapping.begin(), f.mapping.end(), h.num_vertices()) > 0)
        throw std::domain_error("cover map is not total on the source");
    }
    const auto check = strong_cover_check(f);
    json j{{"strong_cover", check.ok}};
    if (!check.ok) {
      j["reason"] = check.reason;
      if (check.edge) j["edge"] = edge_json(g, *check.edge);
      throw PropertyFalse{j};
    }
    if (transfer) {
      const auto report = cover_flatness_transfer(f, jobs);
      j["edges_checked"] = report.edges.size();
      j["curvatures_equal"] = report.ok();
      std::set<std::string> values;
      for (const auto& c : report.edges) values.insert(r2s(c.source_kappa));
      j["kappa_values"] = values;
      if (!report.ok()) throw PropertyFalse{j};
    }
    out << j.dump(2) << '\n';
  }
};

struct LatticeCmd {
  std::string type;
  int radius = 5;
  std::string generators = "full";
  int check_distances = 0;
  unsigned jobs = 1;
  GraphSink sink;

  void run(std::ostream& out) const {
    const LatticeSpec spec = lattice_spec(type, generators);
    const auto& sys = spec.system;
    json j{{"type", sys.label},
           {"roots", sys.roots.size()},
           {"squared_lengths", sys.squared_lengths},
           {"generators", spec.generators.size()},
           {"radius", radius}};
    bool ok = true;
    if (sys.rank() <= kMaxSweepRank) {
      const auto ball = cayley_ball(spec, radius);
      j["vertices"] = ball.graph.num_vertices();
      j["edges"] = ball.graph.num_edges();
      j["interior_edges"] = ball.graph.interior_edges().size();
      if (!sink.path.empty()) sink.write(ball.graph, out);
      if (radius >= 4) {
        const auto report = lattice_flatness_check(spec, radius, jobs);
        j["flat"] = report.flat();
        ok = ok && report.flat();
      }
    }
    json orbits = json::array();
    for (const auto& [s, k] : lattice_orbit_curvatures(spec, orbit_representatives(spec), jobs)) {
      orbits.push_back({{"generator", vector_json(simple_coords(sys, s))}, {"kappa", r2s(k)}});
      ok = ok && k == 0;
    }
    j["orbits"] = orbits;
    if (check_distances > 0) {
      json hyp = json::array();
      for (const auto& s : spec.generators) {
        const auto r = distance_hypothesis_check(spec, s, check_distances);
        hyp.push_back({{"generator", vector_json(simple_coords(sys, s))},
                       {"ok", r.ok},
                       {"inner_product_checked", r.inner_product_checked}});
        ok = ok && r.ok;
      }
      j["distance_hypothesis"] = hyp;
    }
    if (!ok) throw PropertyFalse{j};
    out << j.dump(2) << '\n';
  }
};

struct QuotientCmd {
  std::string type;
  std::string sublattice;
  std::string generators = "full";
  bool verify = false;
  unsigned jobs = 1;
  GraphSink sink;

  void run(std::ostream& out) const {
    const LatticeSpec spec = lattice_spec(type, generators);
    QuotientSpec q{spec, parse_sublattice(spec.system, sublattice)};
    QuotientGraph quotient = [&] {
      try {
        return quotient_graph(q);
      } catch (const QuotientRefused& e) {
        throw PropertyFalse{json{{"refused", true},
                                 {"reason", e.what()},
                                 {"element", vector_json(simple_coords(spec.system, e.element()))},
                                 {"distance", e.distance()}}};
      }
    }();
    const Graph& g = quotient.graph;
    if (!verify) {
      sink.write(g, out);
      return;
    }
    const auto report = is_ricci_flat(g, jobs);
    json j{{"refused", false},
           {"vertices", g.num_vertices()},
           {"edges", g.num_edges()},
           {"girth", girth_json(g)},
           {"flatness", flatness_json(g, report)}};
    if (!sink.path.empty()) sink.write(g, out);
    if (!report.flat) throw PropertyFalse{j};
    out << j.dump(2) << '\n';
  }
};

struct LemmaCheckCmd {
  GraphSource source;

  void run(std::ostream& out) const {
    const Graph g = source.load();
    json edges = json::array();
    bool ok = true;
    for (const auto& e : g.interior_edges()) {
      const auto r = kappa(g, e.u, e.v, {.cross_check = false});
      json item = edge_json(g, e);
      item["kappa"] = r2s(r.kappa);
      if (const auto f = lemma1_formula(g, e.u, e.v)) {
        item["lemma1"] = r2s(*f);
        ok = ok && *f == r.kappa;
      }
      if (const auto b = lemma2_bound(g, e.u, e.v)) {
        item["lemma2_bound"] = r2s(*b);
        ok = ok && r.kappa <= *b;
      }
      if (const auto c = lemma3_classify(g, e)) {
        item["lemma3"] = to_string(c->id);
        if (r.kappa == 0 && c->id == Lemma3CaseId::kViolation) ok = false;
      } else {
        item["lemma3"] = "not applicable";
      }
      edges.push_back(std::move(item));
    }
    json j{{"consistent", ok}, {"edges", edges}};
    if (!ok) throw PropertyFalse{j};
    out << j.dump(2) << '\n';
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Ollivier-Ricci curvature of graphs and lattices", "ricci"};
  app.require_subcommand(1);

  CurvatureCmd curvature;
  auto* c = app.add_subcommand("curvature", "curvature of edges");
  curvature.source.add_to(c);
  c->add_flag("--all", curvature.all, "every interior edge (the default)");
  c->add_option("--edge", curvature.edge, "two vertex labels")->expected(2);
  c->add_option("--alpha", curvature.alpha, "report kappa_alpha for this alpha, e.g. 1/2");
  c->add_flag("--check-lemmas", curvature.check_lemmas, "cross-check against the closed-form lemmas");
  c->add_option("--jobs", curvature.jobs, "worker threads")->check(CLI::PositiveNumber);

  GenerateCmd generate;
  auto* gen = app.add_subcommand("generate", "write a named graph");
  gen->add_option("--named", generate.named, "graph name")->required();
  generate.sink.add_to(gen);

  VerifyFlatCmd verify;
  auto* v = app.add_subcommand("verify-flat", "check kappa = 0 on every interior edge");
  verify.source.add_to(v);
  v->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::PositiveNumber);

  SearchCmd search;
  auto* s = app.add_subcommand("search", "all flat connected graphs of girth >= 5 up to an order");
  s->add_option("--max-n", search.max_n, "largest order")->check(CLI::Range(1, kMaxSearchOrder));
  s->add_option("--output-dir", search.output_dir, "write one edge list per graph here");
  s->add_option("--jobs", search.jobs, "worker threads")->check(CLI::PositiveNumber);

  ProductCmd product;
  auto* p = app.add_subcommand("product", "Cartesian product of two graphs");
  product.left.add_to(p, "left");
  product.right.add_to(p, "right");
  p->add_flag("--check", product.check, "compare product curvatures with the scaled factor curvatures");
  p->add_option("--jobs", product.jobs, "worker threads")->check(CLI::PositiveNumber);
  product.sink.add_to(p);

  CoverCheckCmd cover;
  auto* cc = app.add_subcommand("cover-check", "strong covering check");
  cover.source.add_to(cc, "source");
  cover.target.add_to(cc, "target");
  cc->add_option("--map", cover.map_path, "file of 'source-label target-label' lines");
  cc->add_flag("--modular", cover.modular, "map v to v mod |target|");
  cc->add_flag("--transfer", cover.transfer, "also compare curvatures edge by edge");
  cc->add_option("--jobs", cover.jobs, "worker threads")->check(CLI::PositiveNumber);

  LatticeCmd lattice;
  auto* l = app.add_subcommand("lattice", "root lattice Cayley graph");
  l->add_option("--type", lattice.type, "root system, e.g. B2, A1A1, E8")->required();
  l->add_option("--radius", lattice.radius, "ball radius")->check(CLI::NonNegativeNumber);
  l->add_option("--generators", lattice.generators, "'full' or comma-separated root indices");
  l->add_option("--check-distances", lattice.check_distances, "verify d(0, ns) = n up to this n");
  l->add_option("--jobs", lattice.jobs, "worker threads")->check(CLI::PositiveNumber);
  lattice.sink.add_to(l);

  QuotientCmd quotient;
  auto* q = app.add_subcommand("quotient", "finite torus quotient of a root lattice");
  q->add_option("--type", quotient.type, "root system")->required();
  q->add_option("--sublattice", quotient.sublattice, "basis rows in simple-root coordinates, e.g. \"8 0; 0 8\"")
      ->required();
  q->add_option("--generators", quotient.generators, "'full' or comma-separated root indices");
  q->add_flag("--verify", quotient.verify, "report size, girth and flatness instead of the graph");
  q->add_option("--jobs", quotient.jobs, "worker threads")->check(CLI::PositiveNumber);
  quotient.sink.add_to(q);

  LemmaCheckCmd lemma;
  auto* lc = app.add_subcommand("lemma-check", "compare curvature with the local lemmas on every edge");
  lemma.source.add_to(lc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) curvature.run(out);
    if (*gen) generate.run(out);
    if (*v) verify.run(out);
    if (*s) search.run(out);
    if (*p) product.run(out);
    if (*cc) cover.run(out);
    if (*l) lattice.run(out);
    if (*q) quotient.run(out);
    if (*lc) lemma.run(out);
  } catch (const PropertyFalse& f) {
    out << f.report.dump(2) << '\n';
    return kExitPropertyFalse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace ricci::cli
