#include "ricci/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace ricci {

Graph::Graph(std::size_t n) : adjacency_(n), labels_(n) {
  for (std::size_t i = 0; i < n; ++i) labels_[i] = static_cast<std::int64_t>(i);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex x) const {
  if (x >= adjacency_.size()) {
    throw std::domain_error("unknown vertex " + std::to_string(x));
  }
}

bool Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::domain_error("self-loop at vertex " + std::to_string(a));
  auto& na = adjacency_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) return false;
  na.insert(it, b);
  auto& nb = adjacency_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++num_edges_;
  return true;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  labels_.push_back(static_cast<std::int64_t>(adjacency_.size() - 1));
  if (!interior_.empty()) interior_.push_back(true);
  return adjacency_.size() - 1;
}

std::span<const Vertex> Graph::neighbors(Vertex x) const {
  check_vertex(x);
  return adjacency_[x];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::int64_t Graph::label(Vertex x) const {
  check_vertex(x);
  return labels_[x];
}

void Graph::set_labels(std::vector<std::int64_t> labels) {
  if (labels.size() != adjacency_.size()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

bool Graph::is_interior(Vertex x) const {
  check_vertex(x);
  return interior_.empty() || interior_[x];
}

void Graph::set_interior(std::vector<bool> interior) {
  if (!interior.empty() && interior.size() != adjacency_.size()) {
    throw std::invalid_argument("interior mask size does not match vertex count");
  }
  interior_ = std::move(interior);
}

std::vector<Edge> Graph::interior_edges() const {
  std::vector<Edge> all = edges();
  if (interior_.empty()) return all;
  std::erase_if(all, [&](const Edge& e) { return !is_interior_edge(e); });
  return all;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::size_t> position(adjacency_.size(),
                                    std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    position[keep[i]] = i;
  }
  Graph sub(keep.size());
  std::vector<std::int64_t> labels(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels[i] = labels_[keep[i]];
    for (Vertex w : adjacency_[keep[i]]) {
      const std::size_t j = position[w];
      if (j != std::numeric_limits<std::size_t>::max() && i < j) sub.add_edge(i, j);
    }
  }
  sub.set_labels(std::move(labels));
  return sub;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, std::optional<int> cap) {
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  if (!g.contains(source)) throw std::domain_error("unknown vertex " + std::to_string(source));
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (cap && dist[u] >= *cap) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex x, Vertex y, std::optional<int> cap) {
  if (!g.contains(y)) throw std::domain_error("unknown vertex " + std::to_string(y));
  const int d = bfs_distances(g, x, cap)[y];
  if (d == kUnreachable) {
    if (cap) return *cap + 1;
    return std::nullopt;
  }
  return d;
}

std::vector<Vertex> neighbors(const Graph& g, Vertex x) {
  auto span = g.neighbors(x);
  return {span.begin(), span.end()};
}

DistanceOracle::DistanceOracle(const Graph& g, std::optional<int> cap)
    : n_(g.num_vertices()), cap_(cap), table_(n_ * n_, kUnreachable) {
  for (Vertex s = 0; s < n_; ++s) {
    const auto row = bfs_distances(g, s, cap);
    std::copy(row.begin(), row.end(), table_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

std::optional<int> girth(const Graph& g) {
  // A BFS from s finds the shortest cycle through s via the first non-tree
  // edge; the minimum over all sources is exact.
  const std::size_t n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    parent[s] = s;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

int edge_in_small_cycle(const Graph& g, const Edge& e, int k) {
  if (k < 3 || k > 5) throw std::domain_error("cycle length must be 3, 4 or 5");
  if (!g.has_edge(e.u, e.v)) throw std::domain_error("edge not in graph");
  // Enumerate simple paths v = p_0, ..., p_{k-1} = u of length k-1 that avoid
  // the edge itself; each closes a k-cycle with e.
  std::set<std::vector<Vertex>> cycles;
  std::vector<Vertex> path{e.v};
  auto extend = [&](auto&& self) -> void {
    const Vertex tail = path.back();
    if (static_cast<int>(path.size()) == k - 1) {
      if (g.has_edge(tail, e.u)) {
        std::vector<Vertex> set = path;
        set.push_back(e.u);
        std::sort(set.begin(), set.end());
        cycles.insert(std::move(set));
      }
      return;
    }
    for (Vertex w : g.neighbors(tail)) {
      if (w == e.u || std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };
  extend(extend);
  return static_cast<int>(cycles.size());
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

}  // namespace ricci
