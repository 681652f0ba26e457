#include "ricci/curvature.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ricci/local_ball.hpp"
#include "ricci/parallel.hpp"

namespace ricci {

const char* to_string(CurvatureMethod method) {
  switch (method) {
    case CurvatureMethod::kLimitByStabilization:
      return "limit-by-stabilization";
    case CurvatureMethod::kLemma1Formula:
      return "lemma1-formula";
  }
  return "unknown";
}

namespace {

void check_alpha(const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw std::domain_error("alpha must lie in [0, 1]");
}

Measure lazy_from_neighbors(Vertex center, const std::vector<Vertex>& nbrs,
                            const Rational& alpha) {
  check_alpha(alpha);
  if (nbrs.empty()) {
    throw std::domain_error("lazy measure of isolated vertex " + std::to_string(center));
  }
  Measure m;
  m.add(center, alpha);
  const Rational share = (1 - alpha) / Rational(static_cast<long>(nbrs.size()));
  for (Vertex v : nbrs) m.add(v, share);
  return m;
}

}  // namespace

Measure lazy_measure(const Graph& g, Vertex x, const Rational& alpha) {
  return lazy_from_neighbors(x, neighbors(g, x), alpha);
}

Measure lazy_measure(const PairNeighborhood& nb, bool at_x, const Rational& alpha) {
  return at_x ? lazy_from_neighbors(nb.x, nb.neighbors_x, alpha)
              : lazy_from_neighbors(nb.y, nb.neighbors_y, alpha);
}

PairNeighborhood edge_neighborhood(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw std::domain_error("curvature needs two distinct vertices");
  PairNeighborhood nb;
  nb.x = x;
  nb.y = y;
  nb.neighbors_x = neighbors(g, x);
  nb.neighbors_y = neighbors(g, y);
  if (nb.neighbors_x.empty() || nb.neighbors_y.empty()) {
    throw std::domain_error("curvature of an isolated vertex");
  }
  if (g.has_edge(x, y)) {
    const LocalBall ball = local_ball(g, Edge(x, y), 2);
    std::vector<Vertex> points;
    for (Vertex b : ball.table_vertices) points.push_back(ball.to_parent[b]);
    // to_parent is increasing, so the table order is preserved.
    nb.metric = Metric(std::move(points), ball.table);
    nb.distance = 1;
    return nb;
  }
  const auto d = distance(g, x, y);
  if (!d) throw std::domain_error("vertices lie in different components");
  std::vector<Vertex> points{x, y};
  points.insert(points.end(), nb.neighbors_x.begin(), nb.neighbors_x.end());
  points.insert(points.end(), nb.neighbors_y.begin(), nb.neighbors_y.end());
  nb.metric = graph_metric(g, std::move(points));
  nb.distance = *d;
  return nb;
}

Rational kappa_alpha(const PairNeighborhood& nb, const Rational& alpha) {
  const Measure mx = lazy_measure(nb, true, alpha);
  const Measure my = lazy_measure(nb, false, alpha);
  const TransportSolution sol = solve_transport(mx, my, nb.metric);
  return 1 - sol.cost / Rational(nb.distance);
}

Rational kappa_alpha(const Graph& g, Vertex x, Vertex y, const Rational& alpha) {
  return kappa_alpha(edge_neighborhood(g, x, y), alpha);
}

CurvatureResult kappa(const PairNeighborhood& nb) {
  CurvatureResult result;
  result.x = nb.x;
  result.y = nb.y;
  const long start = static_cast<long>(std::max(nb.degree_x(), nb.degree_y())) + 1;
  std::optional<Rational> previous;
  for (int step = 0; step < kMaxRefinementSteps; ++step) {
    const long k = start + step;
    const Rational alpha = make_rational(k, k + 1);
    const Rational ka = kappa_alpha(nb, alpha);
    result.samples.push_back({alpha, ka});
    const Rational h = ka * (k + 1);  // kappa_alpha / (1 - alpha)
    if (previous) {
      if (h < *previous) {
        std::ostringstream msg;
        msg << "kappa_alpha/(1-alpha) decreased from " << *previous << " to " << h
            << " at alpha=" << alpha;
        throw std::logic_error(msg.str());
      }
      if (h == *previous) {
        result.kappa = h;
        return result;
      }
    }
    previous = h;
  }
  throw std::runtime_error("limit did not stabilize for pair (" + std::to_string(nb.x) + ", " +
                           std::to_string(nb.y) + ")");
}

CurvatureResult kappa(const Graph& g, Vertex x, Vertex y, KappaOptions options) {
  if (!g.has_edge(x, y) && !options.allow_non_adjacent) {
    throw std::domain_error("(" + std::to_string(x) + ", " + std::to_string(y) +
                            ") is not an edge");
  }
  CurvatureResult result = kappa(edge_neighborhood(g, x, y));
  if (options.cross_check && g.has_edge(x, y)) {
    if (auto formula = lemma1_formula(g, x, y)) {
      if (*formula != result.kappa) {
        throw std::logic_error("transport curvature " + to_string(result.kappa) +
                               " disagrees with the tree-like formula " + to_string(*formula));
      }
    }
  }
  return result;
}

std::optional<Rational> lemma1_formula(const Graph& g, Vertex x, Vertex y) {
  const Edge e(x, y);
  for (int k : {3, 4, 5}) {
    if (edge_in_small_cycle(g, e, k) != 0) return std::nullopt;
  }
  return make_rational(2, static_cast<std::int64_t>(g.degree(x))) +
         make_rational(2, static_cast<std::int64_t>(g.degree(y))) - 2;
}

std::optional<Rational> lemma2_bound(const Graph& g, Vertex x, Vertex y) {
  const Edge e(x, y);
  for (int k : {3, 4}) {
    if (edge_in_small_cycle(g, e, k) != 0) return std::nullopt;
  }
  const Rational dx(static_cast<long>(g.degree(x)));
  const Rational dy(static_cast<long>(g.degree(y)));
  const Rational one_way = 1 / dx + 2 / dy - 1;
  const Rational other_way = 1 / dy + 2 / dx - 1;
  return std::min(one_way, other_way);
}

std::vector<CurvatureResult> edge_curvatures(const Graph& g, unsigned jobs) {
  const auto edges = g.interior_edges();
  std::vector<CurvatureResult> results(edges.size());
  parallel_for(edges.size(), jobs, [&](std::size_t i) {
    results[i] = kappa(g, edges[i].u, edges[i].v);
  });
  return results;
}

FlatnessReport is_ricci_flat(const Graph& g, unsigned jobs, bool stop_at_first) {
  FlatnessReport report;
  if (stop_at_first) {
    for (const Edge& e : g.interior_edges()) {
      ++report.edges_checked;
      const Rational k = kappa(g, e.u, e.v).kappa;
      if (k != 0) {
        report.flat = false;
        report.non_flat.emplace_back(e, k);
        break;
      }
    }
    return report;
  }
  const auto results = edge_curvatures(g, jobs);
  report.edges_checked = results.size();
  for (const auto& r : results) {
    if (r.kappa != 0) report.non_flat.emplace_back(r.edge(), r.kappa);
  }
  report.flat = report.non_flat.empty();
  return report;
}

}  // namespace ricci
