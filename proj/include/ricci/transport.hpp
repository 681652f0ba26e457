#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

/// Finitely supported distribution with exact masses. Zero masses are not
/// stored, so the keys are exactly the support.
class Measure {
 public:
  Measure() = default;
  Measure(std::initializer_list<std::pair<const Vertex, Rational>> masses);

  /// Adds to the mass at v. Throws std::domain_error if the result is negative.
  void add(Vertex v, const Rational& mass);
  Rational operator()(Vertex v) const;

  const std::map<Vertex, Rational>& support() const { return mass_; }
  std::size_t size() const { return mass_.size(); }
  Rational total() const;
  bool is_probability() const { return total() == 1; }

  static Measure dirac(Vertex v);

 private:
  std::map<Vertex, Rational> mass_;
};

/// Integer distance table over a finite vertex set.
class Metric {
 public:
  Metric() = default;
  /// `dist` is row-major over `points`; throws std::invalid_argument on size
  /// mismatch, duplicate points, asymmetry or a nonzero diagonal.
  Metric(std::vector<Vertex> points, std::vector<int> dist);

  bool contains(Vertex v) const;
  /// Throws std::domain_error when either vertex is absent.
  int operator()(Vertex a, Vertex b) const;
  const std::vector<Vertex>& points() const { return points_; }

  bool satisfies_triangle_inequality() const;

 private:
  std::size_t index_of(Vertex v) const;

  std::vector<Vertex> points_;  // sorted
  std::vector<int> dist_;
};

/// Full distance table of a graph restricted to `points`.
Metric graph_metric(const Graph& g, std::vector<Vertex> points);

struct Coupling {
  std::map<std::pair<Vertex, Vertex>, Rational> entries;
};

struct DualCertificate {
  std::map<Vertex, Rational> potential;
};

struct TransportSolution {
  Rational cost;
  Coupling coupling;
  DualCertificate dual;
};

struct Verification {
  bool ok = true;
  std::vector<std::string> reasons;

  explicit operator bool() const { return ok; }
  void fail(std::string reason) {
    ok = false;
    reasons.push_back(std::move(reason));
  }
};

/// Exact W1 by the transportation simplex: northwest-corner start, Bland's
/// rule for entering and leaving cells. The dual potential is the
/// 1-Lipschitz extension max_i(u_i - d(i, z)) of the row potentials to the
/// union of supports, shifted to vanish at the first vertex of m1's support.
///
/// Throws std::domain_error if the total masses differ, a mass is negative,
/// or the metric misses a support vertex.
TransportSolution solve_transport(const Measure& m1, const Measure& m2, const Metric& metric);

Rational coupling_cost(const Coupling& coupling, const Metric& metric);
/// Σ_z f(z) (m1(z) - m2(z)).
Rational dual_objective(const DualCertificate& dual, const Measure& m1, const Measure& m2);

/// Nonnegativity and both marginals.
Verification verify_coupling(const Coupling& coupling, const Measure& m1, const Measure& m2,
                             const Metric& metric);
/// Coupling feasibility, Lipschitz feasibility on the union of supports, and
/// equality of the primal cost, the dual objective and the reported cost.
Verification verify_solution(const TransportSolution& sol, const Measure& m1,
                             const Measure& m2, const Metric& metric);

inline constexpr std::size_t kBruteForceMaxSupport = 6;

/// Independent oracle: minimum cost over every spanning-tree basis of the
/// transportation polytope. Refuses (std::domain_error) supports larger than
/// kBruteForceMaxSupport.
Rational brute_force_transport(const Measure& m1, const Measure& m2, const Metric& metric);

}  // namespace ricci
