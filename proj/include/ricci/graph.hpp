#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ricci {

using Vertex = std::size_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on dense vertex indices 0..n-1.
///
/// Every vertex carries an integer label (defaulting to its index) used by
/// the file formats, and optionally an interior flag. Graphs that stand in
/// for a finite window of an infinite graph mark the vertices whose radius-2
/// neighbourhood is complete; only edges between interior vertices are judged
/// by the curvature sweeps. Builders mutate a Graph; everything downstream
/// takes it by const reference.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  /// Returns false if the edge was already present. Throws std::domain_error
  /// on self-loops and unknown endpoints.
  bool add_edge(Vertex a, Vertex b);
  Vertex add_vertex();

  std::span<const Vertex> neighbors(Vertex x) const;
  std::size_t degree(Vertex x) const { return neighbors(x).size(); }
  bool has_edge(Vertex a, Vertex b) const;
  bool contains(Vertex x) const { return x < adjacency_.size(); }

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  std::int64_t label(Vertex x) const;
  const std::vector<std::int64_t>& labels() const { return labels_; }
  void set_labels(std::vector<std::int64_t> labels);

  bool has_interior_marking() const { return !interior_.empty(); }
  bool is_interior(Vertex x) const;
  bool is_interior_edge(const Edge& e) const {
    return is_interior(e.u) && is_interior(e.v);
  }
  void set_interior(std::vector<bool> interior);
  /// Edges whose both endpoints are interior (all edges when unmarked).
  std::vector<Edge> interior_edges() const;

  /// Induced subgraph; the i-th vertex of the result is `keep[i]` and keeps
  /// its label. Interior marking is dropped.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(Vertex x) const;

  std::vector<std::vector<Vertex>> adjacency_;  // sorted
  std::vector<std::int64_t> labels_;
  std::vector<bool> interior_;
  std::size_t num_edges_ = 0;
};

inline constexpr int kUnreachable = -1;

/// Hop distances from `source`; kUnreachable for vertices further than `cap`
/// (when given) or in another component. Never explores beyond `cap`.
std::vector<int> bfs_distances(const Graph& g, Vertex source,
                               std::optional<int> cap = std::nullopt);

/// Exact distance, or nullopt when unreachable. With a cap, distances beyond
/// it are reported as cap + 1 (including unreachable pairs).
std::optional<int> distance(const Graph& g, Vertex x, Vertex y,
                            std::optional<int> cap = std::nullopt);

/// Returns exactly the adjacency set of x; std::domain_error for unknown x.
std::vector<Vertex> neighbors(const Graph& g, Vertex x);

/// Eagerly computed all-pairs hop distances.
class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g, std::optional<int> cap = std::nullopt);

  /// kUnreachable beyond the cap or across components.
  int operator()(Vertex x, Vertex y) const { return table_[x * n_ + y]; }
  std::optional<int> cap() const { return cap_; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::optional<int> cap_;
  std::vector<int> table_;
};

/// Shortest cycle length, nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Number of distinct vertex sets carrying a k-cycle through e, k in {3,4,5}.
int edge_in_small_cycle(const Graph& g, const Edge& e, int k);

bool is_connected(const Graph& g);

}  // namespace ricci
