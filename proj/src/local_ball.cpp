#include "ricci/local_ball.hpp"

#include <algorithm>
#include <stdexcept>

namespace ricci {

int LocalBall::table_distance(Vertex a, Vertex b) const {
  auto ia = std::lower_bound(table_vertices.begin(), table_vertices.end(), a);
  auto ib = std::lower_bound(table_vertices.begin(), table_vertices.end(), b);
  if (ia == table_vertices.end() || *ia != a || ib == table_vertices.end() || *ib != b) {
    throw std::domain_error("vertex outside N(x) ∪ N(y)");
  }
  const auto n = table_vertices.size();
  return table[static_cast<std::size_t>(ia - table_vertices.begin()) * n +
               static_cast<std::size_t>(ib - table_vertices.begin())];
}

LocalBall local_ball(const Graph& g, const Edge& e, int radius) {
  if (radius < 2) throw std::domain_error("local ball radius must be at least 2");
  if (!g.has_edge(e.u, e.v)) throw std::domain_error("local ball needs an edge of the graph");

  const auto from_u = bfs_distances(g, e.u, radius);
  const auto from_v = bfs_distances(g, e.v, radius);
  LocalBall ball;
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    if (from_u[w] != kUnreachable || from_v[w] != kUnreachable) ball.to_parent.push_back(w);
  }
  ball.graph = g.induced(ball.to_parent);
  auto local = [&](Vertex w) {
    return static_cast<Vertex>(
        std::lower_bound(ball.to_parent.begin(), ball.to_parent.end(), w) -
        ball.to_parent.begin());
  };
  ball.x = local(e.u);
  ball.y = local(e.v);

  std::vector<Vertex> support{ball.x, ball.y};
  for (Vertex w : ball.graph.neighbors(ball.x)) support.push_back(w);
  for (Vertex w : ball.graph.neighbors(ball.y)) support.push_back(w);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  ball.table_vertices = support;

  const auto n = support.size();
  ball.table.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto dist = bfs_distances(ball.graph, support[i], LocalBall::kBallDistanceCap);
    for (std::size_t j = 0; j < n; ++j) {
      const int d = dist[support[j]];
      ball.table[i * n + j] = d == kUnreachable ? LocalBall::kBallDistanceCap + 1 : d;
    }
  }
  return ball;
}

}  // namespace ricci
