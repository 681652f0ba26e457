#include "ricci/classify.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>

#include "ricci/canonical.hpp"
#include "ricci/curvature.hpp"
#include "ricci/generators.hpp"
#include "ricci/parallel.hpp"

namespace ricci {

const char* to_string(Lemma3CaseId id) {
  switch (id) {
    case Lemma3CaseId::kDeg22NoC5: return "deg22-noC5";
    case Lemma3CaseId::kDeg33TwoC5: return "deg33-twoC5";
    case Lemma3CaseId::kDeg23Distances: return "deg23-distances";
    case Lemma3CaseId::kDeg24Distances: return "deg24-distances";
    case Lemma3CaseId::kViolation: return "violation";
  }
  return "?";
}

std::optional<Lemma3Case> lemma3_classify(const Graph& g, const Edge& e) {
  if (!g.has_edge(e.u, e.v)) throw std::domain_error("not an edge");
  if (edge_in_small_cycle(g, e, 3) > 0 || edge_in_small_cycle(g, e, 4) > 0) return std::nullopt;

  Lemma3Case result;
  result.x = e.u;
  result.y = e.v;
  if (g.degree(result.x) > g.degree(result.y)) std::swap(result.x, result.y);
  const Vertex x = result.x;
  const Vertex y = result.y;
  const std::size_t dx = g.degree(x);
  const std::size_t dy = g.degree(y);

  auto others = [&](Vertex v, Vertex skip) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
      if (w != skip) out.push_back(w);
    return out;
  };
  auto dist = [&](Vertex a, Vertex b) { return *distance(g, a, b, 3); };

  if (dx == 2 && dy == 2) {
    if (edge_in_small_cycle(g, e, 5) == 0) result.id = Lemma3CaseId::kDeg22NoC5;
  } else if (dx == 3 && dy == 3) {
    if (edge_in_small_cycle(g, e, 5) >= 2) result.id = Lemma3CaseId::kDeg33TwoC5;
  } else if (dx == 2 && dy == 3) {
    const Vertex x1 = others(x, y)[0];
    const auto ys = others(y, x);
    const int a = dist(x1, ys[0]);
    const int b = dist(x1, ys[1]);
    if (std::min(a, b) == 2 && std::max(a, b) == 3) result.id = Lemma3CaseId::kDeg23Distances;
  } else if (dx == 2 && dy == 4) {
    // Every y_i is at distance 2 from x itself, so the condition is read
    // through x's other neighbour.
    const Vertex x1 = others(x, y)[0];
    int close = 0;
    for (Vertex yi : others(y, x))
      if (dist(x1, yi) == 2) ++close;
    if (close >= 2) result.id = Lemma3CaseId::kDeg24Distances;
  }
  return result;
}

std::vector<std::vector<Vertex>> cycles_of_length(const Graph& g, int k) {
  if (k < 3) throw std::domain_error("cycles have length at least 3");
  std::set<std::vector<Vertex>> found;
  std::vector<Vertex> path;
  std::vector<bool> on_path(g.num_vertices(), false);
  // Paths start at their smallest vertex.
  auto extend = [&](auto&& self, Vertex start) -> void {
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == k) {
      if (g.has_edge(last, start)) {
        std::vector<Vertex> cycle = path;
        std::sort(cycle.begin(), cycle.end());
        found.insert(std::move(cycle));
      }
      return;
    }
    for (Vertex w : g.neighbors(last)) {
      if (w <= start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, start);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    path = {s};
    on_path[s] = true;
    extend(extend, s);
    on_path[s] = false;
  }
  return {found.begin(), found.end()};
}

bool no_degree_four(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 4) return false;
  return true;
}

bool no_pentagon_with_two_degree_two(const Graph& g) {
  for (const auto& cycle : cycles_of_length(g, 5)) {
    int low = 0;
    for (Vertex v : cycle)
      if (g.degree(v) == 2) ++low;
    if (low >= 2) return false;
  }
  return true;
}

bool degree_two_three_neighbors(const Graph& g) {
  for (const Edge& e : g.edges()) {
    Vertex x = e.u;
    Vertex y = e.v;
    if (g.degree(x) > g.degree(y)) std::swap(x, y);
    if (g.degree(x) != 2 || g.degree(y) != 3) continue;
    std::vector<std::size_t> degrees;
    for (Vertex w : g.neighbors(y))
      if (w != x) degrees.push_back(g.degree(w));
    std::sort(degrees.begin(), degrees.end());
    if (degrees != std::vector<std::size_t>{2, 3}) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

class HalfDodecahedralExpansion {
 public:
  HalfDodecahedralExpansion(std::size_t budget, ExpansionStats* stats)
      : budget_(budget), stats_(stats) {
    graph_ = cycle_graph(5);
    target_ = {2, 3, 3, 3, 3};
  }

  std::optional<Graph> run() {
    if (search()) return graph_;
    return std::nullopt;
  }

 private:
  bool saturated(Vertex v) const { return graph_.degree(v) == target_[v]; }

  // Curvature of xy is final once x, y and all their neighbours have reached
  // their target degree: the radius-2 data can no longer change. Only edges
  // near a vertex that just saturated can have become final.
  bool consistent_around(Vertex v) const {
    if (!saturated(v)) return true;
    std::set<Vertex> near{v};
    for (Vertex w : graph_.neighbors(v)) {
      near.insert(w);
      for (Vertex z : graph_.neighbors(w)) near.insert(z);
    }
    for (Vertex a : near) {
      for (Vertex b : graph_.neighbors(a)) {
        if (b < a || !edge_is_final(a, b)) continue;
        if (kappa(graph_, a, b, {.cross_check = false}).kappa != 0) return false;
      }
    }
    return true;
  }

  bool edge_is_final(Vertex a, Vertex b) const {
    for (Vertex end : {a, b}) {
      if (!saturated(end)) return false;
      for (Vertex w : graph_.neighbors(end))
        if (!saturated(w)) return false;
    }
    return true;
  }

  bool search() {
    if (stats_) ++stats_->states;
    std::optional<Vertex> open;
    for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
      if (!saturated(v)) {
        open = v;
        break;
      }
    }
    if (!open) return girth(graph_) == 5 && is_ricci_flat(graph_, 1, true).flat;
    const Vertex v = *open;

    for (Vertex w = v + 1; w < graph_.num_vertices(); ++w) {
      if (saturated(w) || graph_.has_edge(v, w)) continue;
      const auto d = distance(graph_, v, w, 3);
      if (d && *d <= 3) continue;
      Graph saved = graph_;
      graph_.add_edge(v, w);
      if (consistent_around(v) && consistent_around(w) && search()) return true;
      graph_ = std::move(saved);
    }
    if (graph_.num_vertices() < budget_) {
      for (std::size_t degree : {2u, 3u}) {
        Graph saved = graph_;
        const Vertex w = graph_.add_vertex();
        target_.push_back(degree);
        graph_.add_edge(v, w);
        if (consistent_around(v) && search()) return true;
        target_.pop_back();
        graph_ = std::move(saved);
      }
    }
    return false;
  }

  std::size_t budget_;
  ExpansionStats* stats_;
  Graph graph_;
  std::vector<std::size_t> target_;
};

}  // namespace

std::optional<Graph> run_half_dodecahedral_expansion(std::size_t max_vertices,
                                                     ExpansionStats* stats) {
  for (std::size_t budget = 5; budget <= max_vertices; ++budget) {
    if (stats) stats->budget = budget;
    if (auto g = HalfDodecahedralExpansion(budget, stats).run()) return g;
  }
  return std::nullopt;
}

const Graph& half_dodecahedral_graph() {
  static const Graph graph = [] {
    auto g = run_half_dodecahedral_expansion(20);
    if (!g) throw std::logic_error("forcing expansion did not close up");
    for (Vertex v = 0; v < g->num_vertices(); ++v) {
      if (g->degree(v) != 2 && g->degree(v) != 3)
        throw std::logic_error("expansion produced a degree outside {2, 3}");
    }
    return *g;
  }();
  return graph;
}

NamedGraph named_graph(GraphFamily family, std::size_t n) {
  NamedGraph out;
  out.family = family;
  switch (family) {
    case GraphFamily::kCycle:
      out.graph = cycle_graph(n);
      out.parameter = n;
      out.name = "cycle(" + std::to_string(n) + ")";
      break;
    case GraphFamily::kPath:
      out.graph = infinite_path_window(n);
      out.parameter = n;
      out.name = "path(" + std::to_string(n) + ")";
      break;
    case GraphFamily::kPetersen:
      out.graph = petersen_graph();
      out.name = "petersen";
      break;
    case GraphFamily::kDodecahedral:
      out.graph = dodecahedral_graph();
      out.name = "dodecahedral";
      break;
    case GraphFamily::kHalfDodecahedral:
      out.graph = half_dodecahedral_graph();
      out.name = "half_dodecahedral";
      break;
  }
  return out;
}

Graph graph_by_name(const std::string& name) {
  std::smatch m;
  auto num = [&](int i) { return static_cast<std::size_t>(std::stoul(m[i].str())); };
  if (std::regex_match(name, m, std::regex(R"((?:C|cycle\()(\d+)\)?)")))
    return cycle_graph(num(1));
  if (std::regex_match(name, m, std::regex(R"((?:P|path\()(\d+)\)?)")))
    return infinite_path_window(num(1));
  if (name == "petersen") return petersen_graph();
  if (name == "dodecahedral") return dodecahedral_graph();
  if (name == "half_dodecahedral" || name == "half-dodecahedral") return half_dodecahedral_graph();
  if (std::regex_match(name, m, std::regex(R"((?:K1,|star\()(\d+)\)?)")))
    return star_graph(num(1));
  if (std::regex_match(name, m, std::regex(R"((?:K|complete\()(\d+)\)?)")))
    return complete_graph(num(1));
  if (std::regex_match(name, m, std::regex(R"(grid\((\d+),\s*(\d+)\))")))
    return grid_graph(num(1), num(2));
  if (std::regex_match(name, m, std::regex(R"(finite_path\((\d+)\))")))
    return path_graph(num(1));
  throw std::invalid_argument("unknown graph name: " + name);
}

// ---------------------------------------------------------------------------

namespace {

bool min_degree_at_least_two(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) < 2) return false;
  return true;
}

// Sets of vertices of degree < 4 with pairwise distance >= 3, each of size
// 1..4, in lexicographic order.
std::vector<std::vector<Vertex>> attachment_sets(const Graph& g, const DistanceOracle& dist) {
  std::vector<Vertex> open;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) < 4) open.push_back(v);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    if (!current.empty()) out.push_back(current);
    if (current.size() == 4) return;
    for (std::size_t i = from; i < open.size(); ++i) {
      const Vertex v = open[i];
      bool far = true;
      for (Vertex u : current) {
        const int d = dist(u, v);
        if (d != kUnreachable && d < 3) {
          far = false;
          break;
        }
      }
      if (!far) continue;
      current.push_back(v);
      self(self, i + 1);
      current.pop_back();
    }
  };
  grow(grow, 0);
  return out;
}

}  // namespace

std::vector<Graph> exhaustive_search(int n_max, unsigned jobs, SearchStats* stats) {
  if (n_max > kMaxSearchOrder)
    throw std::domain_error("exhaustive search is limited to " + std::to_string(kMaxSearchOrder) +
                            " vertices");
  if (stats) stats->connected.assign(static_cast<std::size_t>(std::max(n_max, 0)) + 1, 0);
  std::vector<Graph> flat;
  if (n_max < 1) return flat;

  std::vector<Graph> level{Graph(1)};
  if (stats) stats->connected[1] = 1;
  for (int n = 2; n <= n_max; ++n) {
    const bool last = n == n_max;
    std::vector<std::vector<std::pair<CanonicalForm, Graph>>> found(level.size());
    parallel_for(level.size(), jobs, [&](std::size_t i) {
      const Graph& parent = level[i];
      const DistanceOracle dist(parent);
      std::vector<Vertex> leaves;
      for (Vertex v = 0; v < parent.num_vertices(); ++v)
        if (parent.degree(v) <= 1) leaves.push_back(v);
      std::map<CanonicalForm, Graph> local;
      for (const auto& attach : attachment_sets(parent, dist)) {
        if (last) {
          // Only graphs with minimum degree >= 2 can be flat.
          if (attach.size() < 2 || !std::includes(attach.begin(), attach.end(), leaves.begin(),
                                                  leaves.end()))
            continue;
        }
        Graph child = parent;
        const Vertex w = child.add_vertex();
        for (Vertex v : attach) child.add_edge(v, w);
        auto labeling = canonical_labeling(child);
        if (!local.contains(labeling.form))
          local.emplace(labeling.form, child.induced(labeling.order));
      }
      found[i].assign(std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    });

    std::map<CanonicalForm, Graph> merged;
    for (auto& shard : found)
      for (auto& [form, g] : shard) merged.try_emplace(form, std::move(g));
    if (stats) stats->connected[static_cast<std::size_t>(n)] = merged.size();

    level.clear();
    for (auto& [form, g] : merged) level.push_back(std::move(g));

    if (n < 5) continue;
    std::vector<char> is_flat(level.size(), 0);
    parallel_for(level.size(), jobs, [&](std::size_t i) {
      if (min_degree_at_least_two(level[i]))
        is_flat[i] = is_ricci_flat(level[i], 1, true).flat ? 1 : 0;
    });
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (stats && min_degree_at_least_two(level[i])) ++stats->flatness_checks;
      if (is_flat[i]) flat.push_back(canonical_relabel(level[i]));
    }
  }
  return flat;
}

// ---------------------------------------------------------------------------

const char* to_string(Theorem1Member member) {
  switch (member) {
    case Theorem1Member::kInfinitePathSegment: return "infinite-path-segment";
    case Theorem1Member::kCycle: return "cycle";
    case Theorem1Member::kDodecahedral: return "dodecahedral";
    case Theorem1Member::kPetersen: return "petersen";
    case Theorem1Member::kHalfDodecahedral: return "half-dodecahedral";
    case Theorem1Member::kNone: return "none";
  }
  return "?";
}

Theorem1Member theorem1_membership(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0 || !is_connected(g)) return Theorem1Member::kNone;

  std::size_t max_degree = 0;
  for (Vertex v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));

  if (g.has_interior_marking() && max_degree <= 2 && g.num_edges() == n - 1 && n >= 2) {
    // A window of the infinite path: leaves are boundary, and every interior
    // vertex has its full degree 2.
    bool ok = !g.interior_edges().empty();
    for (Vertex v = 0; v < n && ok; ++v)
      if (g.is_interior(v) && g.degree(v) != 2) ok = false;
    return ok ? Theorem1Member::kInfinitePathSegment : Theorem1Member::kNone;
  }
  if (max_degree == 2 && g.num_edges() == n)
    return n >= 6 ? Theorem1Member::kCycle : Theorem1Member::kNone;
  if (n == 10 && are_isomorphic(g, petersen_graph())) return Theorem1Member::kPetersen;
  if (n == 20 && are_isomorphic(g, dodecahedral_graph())) return Theorem1Member::kDodecahedral;
  if (n == half_dodecahedral_graph().num_vertices() && are_isomorphic(g, half_dodecahedral_graph()))
    return Theorem1Member::kHalfDodecahedral;
  return Theorem1Member::kNone;
}

}  // namespace ricci
