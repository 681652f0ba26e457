#include "ricci/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace ricci {

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::domain_error("cycles need at least 3 vertices");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(std::size_t k) {
  Graph g(k + 1);
  for (std::size_t i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph dodecahedral_graph() {
  Graph g(20);
  for (std::size_t i = 0; i < 10; ++i) {
    g.add_edge(i, (i + 1) % 10);
    g.add_edge(i, i + 10);
    g.add_edge(i + 10, (i + 2) % 10 + 10);
  }
  return g;
}

Graph infinite_path_window(std::size_t n) {
  if (n < 6) throw std::domain_error("a path window needs at least 6 vertices");
  Graph g = path_graph(n);
  std::vector<bool> interior(n, true);
  interior[0] = interior[1] = interior[n - 2] = interior[n - 1] = false;
  g.set_interior(std::move(interior));
  return g;
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  Graph g(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (i + 1 < rows) g.add_edge(i * cols + j, (i + 1) * cols + j);
      if (j + 1 < cols) g.add_edge(i * cols + j, i * cols + j + 1);
    }
  }
  return g;
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  Graph g(n);
  if (n < 2) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (auto c : code) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  const std::size_t a = *leaves.begin();
  const std::size_t b = *std::next(leaves.begin());
  g.add_edge(a, b);
  return g;
}

Graph random_girth5_graph(std::size_t n, std::size_t extra_edges, std::mt19937_64& rng) {
  Graph g = random_tree(n, rng);
  if (n < 5) return g;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t attempt = 0, added = 0; added < extra_edges && attempt < 50 * n; ++attempt) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    if (a == b || g.has_edge(a, b)) continue;
    const auto d = distance(g, a, b, 4);
    if (d && *d < 4) continue;
    g.add_edge(a, b);
    ++added;
  }
  return g;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace ricci
