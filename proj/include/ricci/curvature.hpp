#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"
#include "ricci/transport.hpp"

namespace ricci {

enum class CurvatureMethod { kLimitByStabilization, kLemma1Formula };

const char* to_string(CurvatureMethod method);

struct CurvatureSample {
  Rational alpha;
  Rational kappa_alpha;
};

struct CurvatureResult {
  Vertex x = 0;
  Vertex y = 0;
  Rational kappa;
  std::vector<CurvatureSample> samples;
  CurvatureMethod method = CurvatureMethod::kLimitByStabilization;

  Edge edge() const { return Edge(x, y); }
};

/// Mass alpha at x and (1 - alpha) / d_x on each neighbour. Throws
/// std::domain_error for isolated vertices and alpha outside [0, 1].
Measure lazy_measure(const Graph& g, Vertex x, const Rational& alpha);

/// Everything the curvature of a pair depends on: both neighbour lists and
/// the distances among N(x) ∪ N(y). Lattice code builds these directly from
/// vector arithmetic; graphs go through edge_neighborhood.
struct PairNeighborhood {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> neighbors_x;
  std::vector<Vertex> neighbors_y;
  Metric metric;
  int distance = 1;

  std::size_t degree_x() const { return neighbors_x.size(); }
  std::size_t degree_y() const { return neighbors_y.size(); }
};

/// For an edge the metric comes from local_ball(g, xy, 2); for a non-adjacent
/// pair from full breadth-first search. Throws std::domain_error for x == y,
/// isolated endpoints or a disconnected pair.
PairNeighborhood edge_neighborhood(const Graph& g, Vertex x, Vertex y);

Measure lazy_measure(const PairNeighborhood& nb, bool at_x, const Rational& alpha);

/// 1 - W(m_x^alpha, m_y^alpha) / d(x, y).
Rational kappa_alpha(const PairNeighborhood& nb, const Rational& alpha);
Rational kappa_alpha(const Graph& g, Vertex x, Vertex y, const Rational& alpha);

inline constexpr int kMaxRefinementSteps = 20;

/// Limit of kappa_alpha / (1 - alpha) as alpha -> 1, read off the samples
/// alpha_k = k / (k + 1), k = max(d_x, d_y) + 1, ..., once two consecutive
/// values agree exactly. Throws std::runtime_error if that does not happen
/// within kMaxRefinementSteps, and std::logic_error if the sampled sequence
/// decreases.
CurvatureResult kappa(const PairNeighborhood& nb);

struct KappaOptions {
  bool allow_non_adjacent = false;
  /// Compare against lemma1_formula when it applies and throw
  /// std::logic_error on disagreement.
  bool cross_check = true;
};

CurvatureResult kappa(const Graph& g, Vertex x, Vertex y, KappaOptions options = {});

/// 2/d_x + 2/d_y - 2 when xy lies in no 3-, 4- or 5-cycle.
std::optional<Rational> lemma1_formula(const Graph& g, Vertex x, Vertex y);

/// Upper bound 1/d_x + 2/d_y - 1 for edges in no 3- or 4-cycle. Both
/// orientations of the edge are valid bounds; the smaller is returned.
std::optional<Rational> lemma2_bound(const Graph& g, Vertex x, Vertex y);

/// Curvature of every interior edge, in edge order.
std::vector<CurvatureResult> edge_curvatures(const Graph& g, unsigned jobs = 1);

struct FlatnessReport {
  bool flat = true;
  std::size_t edges_checked = 0;
  std::vector<std::pair<Edge, Rational>> non_flat;
};

/// Checks kappa == 0 on every interior edge. With stop_at_first the sweep is
/// sequential and ends at the first non-flat edge.
FlatnessReport is_ricci_flat(const Graph& g, unsigned jobs = 1, bool stop_at_first = false);

}  // namespace ricci
