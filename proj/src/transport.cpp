#include "ricci/transport.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace ricci {

Measure::Measure(std::initializer_list<std::pair<const Vertex, Rational>> masses) {
  for (const auto& [v, m] : masses) add(v, m);
}

void Measure::add(Vertex v, const Rational& mass) {
  Rational updated = (*this)(v) + mass;
  if (updated < 0) throw std::domain_error("negative mass at vertex " + std::to_string(v));
  if (updated == 0) {
    mass_.erase(v);
  } else {
    mass_[v] = updated;
  }
}

Rational Measure::operator()(Vertex v) const {
  auto it = mass_.find(v);
  return it == mass_.end() ? Rational(0) : it->second;
}

Rational Measure::total() const {
  Rational sum = 0;
  for (const auto& [v, m] : mass_) sum += m;
  return sum;
}

Measure Measure::dirac(Vertex v) {
  Measure m;
  m.add(v, 1);
  return m;
}

Metric::Metric(std::vector<Vertex> points, std::vector<int> dist) {
  const std::size_t n = points.size();
  if (dist.size() != n * n) throw std::invalid_argument("distance table has the wrong size");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a] < points[b]; });
  points_.resize(n);
  dist_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    points_[i] = points[order[i]];
    if (i > 0 && points_[i] == points_[i - 1]) {
      throw std::invalid_argument("duplicate point in distance table");
    }
    for (std::size_t j = 0; j < n; ++j) dist_[i * n + j] = dist[order[i] * n + order[j]];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i * n + i] != 0) throw std::invalid_argument("nonzero self-distance");
    for (std::size_t j = 0; j < n; ++j) {
      if (dist_[i * n + j] != dist_[j * n + i]) throw std::invalid_argument("asymmetric distances");
      if (dist_[i * n + j] < 0) throw std::invalid_argument("negative distance");
    }
  }
}

std::size_t Metric::index_of(Vertex v) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), v);
  if (it == points_.end() || *it != v) {
    throw std::domain_error("metric has no entry for vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - points_.begin());
}

bool Metric::contains(Vertex v) const {
  return std::binary_search(points_.begin(), points_.end(), v);
}

int Metric::operator()(Vertex a, Vertex b) const {
  return dist_[index_of(a) * points_.size() + index_of(b)];
}

bool Metric::satisfies_triangle_inequality() const {
  const std::size_t n = points_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (dist_[a * n + c] > dist_[a * n + b] + dist_[b * n + c]) return false;
  return true;
}

Metric graph_metric(const Graph& g, std::vector<Vertex> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  std::vector<int> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = bfs_distances(g, points[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[points[j]] == kUnreachable) {
        throw std::domain_error("points lie in different components");
      }
      dist[i * n + j] = row[points[j]];
    }
  }
  return Metric(std::move(points), std::move(dist));
}

namespace {

void check_instance(const Measure& m1, const Measure& m2, const Metric& metric) {
  if (m1.total() != m2.total()) throw std::domain_error("measures have different total mass");
  for (const auto* m : {&m1, &m2}) {
    for (const auto& [v, mass] : m->support()) {
      if (!metric.contains(v)) {
        throw std::domain_error("metric has no entry for vertex " + std::to_string(v));
      }
    }
  }
}

// Basis tree of the transportation problem: nodes 0..m-1 are rows, m..m+n-1
// columns; each basic cell (i, j) is an edge between node i and node m + j.
class TransportationSimplex {
 public:
  TransportationSimplex(const Measure& m1, const Measure& m2, const Metric& metric)
      : metric_(metric) {
    for (const auto& [v, mass] : m1.support()) {
      rows_.push_back(v);
      supply_.push_back(mass);
    }
    for (const auto& [v, mass] : m2.support()) {
      cols_.push_back(v);
      demand_.push_back(mass);
    }
    m_ = rows_.size();
    n_ = cols_.size();
    cost_.resize(m_ * n_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) cost_[i * n_ + j] = metric(rows_[i], cols_[j]);
  }

  TransportSolution solve() {
    TransportSolution sol;
    if (m_ == 0) return sol;
    northwest_corner();
    while (true) {
      compute_potentials();
      const auto entering = bland_entering();
      if (!entering) break;
      pivot(*entering);
    }
    for (std::size_t idx = 0; idx < m_ * n_; ++idx) {
      if (basic_[idx] && flow_[idx] != 0) {
        sol.coupling.entries[{rows_[idx / n_], cols_[idx % n_]}] = flow_[idx];
        sol.cost += flow_[idx] * cost_[idx];
      }
    }
    sol.dual = extract_dual();
    return sol;
  }

 private:
  void northwest_corner() {
    flow_.assign(m_ * n_, Rational(0));
    basic_.assign(m_ * n_, false);
    std::vector<Rational> ra = supply_;
    std::vector<Rational> rb = demand_;
    std::size_t i = 0;
    std::size_t j = 0;
    while (true) {
      const Rational q = std::min(ra[i], rb[j]);
      flow_[i * n_ + j] = q;
      basic_[i * n_ + j] = true;
      ra[i] -= q;
      rb[j] -= q;
      if (i == m_ - 1 && j == n_ - 1) break;
      if (ra[i] == 0 && i < m_ - 1) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  std::vector<std::vector<std::size_t>> tree_adjacency() const {
    std::vector<std::vector<std::size_t>> adj(m_ + n_);
    for (std::size_t idx = 0; idx < m_ * n_; ++idx) {
      if (!basic_[idx]) continue;
      adj[idx / n_].push_back(idx);
      adj[m_ + idx % n_].push_back(idx);
    }
    return adj;
  }

  std::size_t other_end(std::size_t node, std::size_t cell) const {
    return node < m_ ? m_ + cell % n_ : cell / n_;
  }

  // u_i + v_j = c_ij on every basic cell, anchored at u_0 = 0. Costs are
  // integral, so the potentials are too.
  void compute_potentials() {
    const auto adj = tree_adjacency();
    constexpr auto kUnset = std::numeric_limits<std::int64_t>::min();
    std::vector<std::int64_t> pot(m_ + n_, kUnset);
    pot[0] = 0;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      for (std::size_t cell : adj[node]) {
        const std::size_t next = other_end(node, cell);
        if (pot[next] != kUnset) continue;
        pot[next] = cost_[cell] - pot[node];
        queue.push_back(next);
      }
    }
    row_pot_.assign(pot.begin(), pot.begin() + static_cast<std::ptrdiff_t>(m_));
    col_pot_.assign(pot.begin() + static_cast<std::ptrdiff_t>(m_), pot.end());
  }

  std::optional<std::size_t> bland_entering() const {
    for (std::size_t idx = 0; idx < m_ * n_; ++idx) {
      if (basic_[idx]) continue;
      if (cost_[idx] - row_pot_[idx / n_] - col_pot_[idx % n_] < 0) return idx;
    }
    return std::nullopt;
  }

  void pivot(std::size_t entering) {
    const std::size_t row = entering / n_;
    const std::size_t col_node = m_ + entering % n_;
    const auto adj = tree_adjacency();
    // Tree path from the entering column back to the entering row.
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent_cell(m_ + n_, kNone);
    std::vector<bool> seen(m_ + n_, false);
    std::deque<std::size_t> queue{row};
    seen[row] = true;
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      if (node == col_node) break;
      for (std::size_t cell : adj[node]) {
        const std::size_t next = other_end(node, cell);
        if (seen[next]) continue;
        seen[next] = true;
        parent_cell[next] = cell;
        queue.push_back(next);
      }
    }
    std::vector<std::size_t> path;  // cells from the column side to the row side
    for (std::size_t node = col_node; node != row;) {
      const std::size_t cell = parent_cell[node];
      path.push_back(cell);
      node = other_end(node, cell);
    }
    // Odd positions along the path lose flow.
    std::optional<std::size_t> leaving;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const std::size_t cell = path[k];
      if (!leaving || flow_[cell] < flow_[*leaving] ||
          (flow_[cell] == flow_[*leaving] && cell < *leaving)) {
        leaving = cell;
      }
    }
    const Rational theta = flow_[*leaving];
    flow_[entering] = theta;
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (k % 2 == 0) {
        flow_[path[k]] -= theta;
      } else {
        flow_[path[k]] += theta;
      }
    }
    basic_[entering] = true;
    basic_[*leaving] = false;
    flow_[*leaving] = 0;
  }

  DualCertificate extract_dual() const {
    std::vector<Vertex> support = rows_;
    support.insert(support.end(), cols_.begin(), cols_.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    auto lift = [&](Vertex z) {
      std::int64_t best = std::numeric_limits<std::int64_t>::min();
      for (std::size_t i = 0; i < m_; ++i) {
        best = std::max(best, row_pot_[i] - metric_(rows_[i], z));
      }
      return best;
    };
    const std::int64_t shift = lift(rows_.front());
    DualCertificate dual;
    for (Vertex z : support) dual.potential[z] = Rational(static_cast<long>(lift(z) - shift));
    return dual;
  }

  const Metric& metric_;
  std::vector<Vertex> rows_, cols_;
  std::vector<Rational> supply_, demand_;
  std::size_t m_ = 0, n_ = 0;
  std::vector<std::int64_t> cost_;
  std::vector<Rational> flow_;
  std::vector<bool> basic_;
  std::vector<std::int64_t> row_pot_, col_pot_;
};

}  // namespace

TransportSolution solve_transport(const Measure& m1, const Measure& m2, const Metric& metric) {
  check_instance(m1, m2, metric);
  return TransportationSimplex(m1, m2, metric).solve();
}

Rational coupling_cost(const Coupling& coupling, const Metric& metric) {
  Rational cost = 0;
  for (const auto& [pair, mass] : coupling.entries) cost += mass * metric(pair.first, pair.second);
  return cost;
}

Rational dual_objective(const DualCertificate& dual, const Measure& m1, const Measure& m2) {
  Rational value = 0;
  for (const auto& [z, f] : dual.potential) value += f * (m1(z) - m2(z));
  return value;
}

Verification verify_coupling(const Coupling& coupling, const Measure& m1, const Measure& m2,
                             const Metric& metric) {
  Verification result;
  std::map<Vertex, Rational> rows;
  std::map<Vertex, Rational> cols;
  for (const auto& [pair, mass] : coupling.entries) {
    if (mass < 0) result.fail("negative coupling entry");
    if (!metric.contains(pair.first) || !metric.contains(pair.second)) {
      result.fail("coupling entry outside the metric");
    }
    rows[pair.first] += mass;
    cols[pair.second] += mass;
  }
  auto same_marginal = [](const std::map<Vertex, Rational>& sums, const Measure& m) {
    for (const auto& [v, s] : sums)
      if (s != m(v)) return false;
    for (const auto& [v, mass] : m.support()) {
      auto it = sums.find(v);
      if (it == sums.end() || it->second != mass) return false;
    }
    return true;
  };
  if (!same_marginal(rows, m1)) result.fail("row sum mismatch");
  if (!same_marginal(cols, m2)) result.fail("column sum mismatch");
  return result;
}

Verification verify_solution(const TransportSolution& sol, const Measure& m1,
                             const Measure& m2, const Metric& metric) {
  Verification result = verify_coupling(sol.coupling, m1, m2, metric);
  std::vector<Vertex> support;
  for (const auto* m : {&m1, &m2})
    for (const auto& [v, mass] : m->support()) support.push_back(v);
  for (Vertex v : support) {
    if (!sol.dual.potential.contains(v)) {
      result.fail("potential undefined on support vertex " + std::to_string(v));
      return result;
    }
  }
  bool lipschitz = true;
  for (const auto& [a, fa] : sol.dual.potential) {
    for (const auto& [b, fb] : sol.dual.potential) {
      if (a < b && abs(fa - fb) > metric(a, b)) lipschitz = false;
    }
  }
  if (!lipschitz) result.fail("Lipschitz violation");
  if (result.ok) {
    const Rational primal = coupling_cost(sol.coupling, metric);
    const Rational dual = dual_objective(sol.dual, m1, m2);
    if (primal != sol.cost) result.fail("reported cost differs from coupling cost");
    if (primal != dual) result.fail("duality gap " + to_string(primal - dual));
  }
  return result;
}

namespace {

// Union-find with an undo log, for enumerating spanning trees by DFS.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t a) const {
    while (parent_[a] != a) a = parent_[a];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    log_.push_back(b);
    return true;
  }
  void undo() {
    const std::size_t b = log_.back();
    log_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> log_;
};

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::domain_error("scaled masses overflow 64 bits");
  return z.get_si();
}

}  // namespace

Rational brute_force_transport(const Measure& m1, const Measure& m2, const Metric& metric) {
  check_instance(m1, m2, metric);
  if (m1.size() > kBruteForceMaxSupport || m2.size() > kBruteForceMaxSupport) {
    throw std::domain_error("brute force refuses supports larger than " +
                            std::to_string(kBruteForceMaxSupport));
  }
  const std::size_t m = m1.size();
  const std::size_t n = m2.size();
  if (m == 0) return 0;

  // Common denominator: every basic solution is then integral.
  mpz_class scale = 1;
  for (const auto* measure : {&m1, &m2})
    for (const auto& [v, mass] : measure->support())
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), mass.get_den_mpz_t());
  std::vector<std::int64_t> amount;  // rows then columns
  std::vector<Vertex> row_v, col_v;
  for (const auto& [v, mass] : m1.support()) {
    row_v.push_back(v);
    amount.push_back(to_int64(mpz_class(mass.get_num() * (scale / mass.get_den()))));
  }
  for (const auto& [v, mass] : m2.support()) {
    col_v.push_back(v);
    amount.push_back(to_int64(mpz_class(mass.get_num() * (scale / mass.get_den()))));
  }
  std::vector<std::int64_t> cost(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = metric(row_v[i], col_v[j]);

  const std::size_t nodes = m + n;
  const std::size_t tree_size = nodes - 1;
  std::optional<std::int64_t> best;
  std::vector<std::size_t> chosen;
  RollbackUnionFind uf(nodes);

  // Flows on a spanning tree are forced: peel leaves.
  auto evaluate = [&]() {
    std::vector<std::int64_t> rem = amount;
    std::vector<int> degree(nodes, 0);
    std::vector<bool> alive(chosen.size(), true);
    for (std::size_t cell : chosen) {
      ++degree[cell / n];
      ++degree[m + cell % n];
    }
    std::int64_t total = 0;
    for (std::size_t removed = 0; removed < chosen.size(); ++removed) {
      std::size_t pick = chosen.size();
      std::size_t leaf = 0;
      for (std::size_t k = 0; k < chosen.size() && pick == chosen.size(); ++k) {
        if (!alive[k]) continue;
        const std::size_t r = chosen[k] / n;
        const std::size_t c = m + chosen[k] % n;
        if (degree[r] == 1) {
          pick = k;
          leaf = r;
        } else if (degree[c] == 1) {
          pick = k;
          leaf = c;
        }
      }
      const std::size_t cell = chosen[pick];
      const std::size_t r = cell / n;
      const std::size_t c = m + cell % n;
      const std::int64_t flow = rem[leaf];
      if (flow < 0) return;
      rem[r] -= flow;
      rem[c] -= flow;
      --degree[r];
      --degree[c];
      alive[pick] = false;
      total += flow * cost[cell];
    }
    if (!best || total < *best) best = total;
  };

  auto dfs = [&](auto&& self, std::size_t cell) -> void {
    if (chosen.size() == tree_size) {
      evaluate();
      return;
    }
    if (m * n - cell < tree_size - chosen.size()) return;
    if (uf.unite(cell / n, m + cell % n)) {
      chosen.push_back(cell);
      self(self, cell + 1);
      chosen.pop_back();
      uf.undo();
    }
    self(self, cell + 1);
  };
  dfs(dfs, 0);

  Rational result(mpz_class(static_cast<long>(*best)), scale);
  result.canonicalize();
  return result;
}

}  // namespace ricci
