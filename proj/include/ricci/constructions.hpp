#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;
};

/// G □ H. Vertex (u, v) gets index u * |V(H)| + v. When either factor is
/// interior-marked, (u, v) is interior iff both coordinates are.
Graph cartesian_product(const Graph& g, const Graph& h);

inline VertexPair product_coordinates(const Graph& h, Vertex p) {
  return {p / h.num_vertices(), p % h.num_vertices()};
}

struct ProductEdgeCheck {
  Edge edge;                 // in the product
  bool along_first = false;  // the edge moves the G coordinate
  Edge factor_edge;
  Rational factor_kappa;
  Rational predicted;
  Rational kappa;
};

struct ProductCurvatureReport {
  std::vector<ProductEdgeCheck> edges;
  std::vector<ProductEdgeCheck> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Recomputes every edge of G □ H by linear programming and compares it with
/// d_G / (d_G + d_H) * κ^G along G and d_H / (d_G + d_H) * κ^H along H.
/// Throws std::domain_error("theorem precondition unmet: ...") unless both
/// factors are regular.
ProductCurvatureReport product_curvature_check(const Graph& g, const Graph& h, unsigned jobs = 1);

/// A vertex map between two graphs; the graphs must outlive it.
struct CoverMap {
  const Graph* source = nullptr;
  const Graph* target = nullptr;
  std::vector<Vertex> mapping;

  /// Throws std::domain_error unless mapping is total and lands in target.
  void validate() const;
  Vertex operator()(Vertex v) const { return mapping[v]; }
};

/// The map v -> v mod |V(target)|; handy for cycles covering cycles.
CoverMap modular_cover(const Graph& source, const Graph& target);

struct CoverCheck {
  bool ok = true;
  std::optional<Edge> edge;  // first source edge whose neighbourhood fails
  std::string reason;
};

/// True iff f is surjective and, for every edge uv of the source, f maps the
/// subgraph induced on Γ(u) ∪ Γ(v) isomorphically onto the subgraph induced on
/// Γ(f(u)) ∪ Γ(f(v)).
CoverCheck strong_cover_check(const CoverMap& f);

struct CoverEdgeCurvature {
  Edge source_edge;
  Edge target_edge;
  Rational source_kappa;
  Rational target_kappa;
};

struct CoverTransferReport {
  std::vector<CoverEdgeCurvature> edges;
  std::vector<CoverEdgeCurvature> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// κ(u, v) against κ(f(u), f(v)) on every source edge. Refuses with
/// std::domain_error when f is not a strong cover.
CoverTransferReport cover_flatness_transfer(const CoverMap& f, unsigned jobs = 1);

}  // namespace ricci
