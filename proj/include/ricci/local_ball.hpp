#pragma once

#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

/// Induced subgraph on every vertex within `radius` of either endpoint of an
/// edge, plus the pairwise distances among N(x) ∪ N(y) capped at
/// kBallDistanceCap.
///
/// For radius >= 2 the table is exact: N(x) and N(y) are joined by the path
/// through x and y, so no entry exceeds 3, and a path of length at most 3
/// between two of these vertices never leaves the radius-2 ball.
struct LocalBall {
  static constexpr int kBallDistanceCap = 3;

  Graph graph;
  std::vector<Vertex> to_parent;  // ball vertex -> vertex of the source graph
  Vertex x = 0;                   // ball ids of the edge endpoints
  Vertex y = 0;
  std::vector<Vertex> table_vertices;  // ball ids of N(x) ∪ N(y), sorted
  std::vector<int> table;              // row-major, capped at kBallDistanceCap

  int table_distance(Vertex a, Vertex b) const;
};

/// Throws std::domain_error if radius < 2 or e is not an edge of g.
LocalBall local_ball(const Graph& g, const Edge& e, int radius);

}  // namespace ricci
