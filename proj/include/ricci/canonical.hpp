#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

/// Isomorphism-invariant code of a graph: the upper triangle of its adjacency
/// matrix under the canonical vertex order, one byte per pair.
struct CanonicalForm {
  std::size_t num_vertices = 0;
  std::string code;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[i] is the vertex placed at position i.
  std::vector<Vertex> order;
};

/// Lexicographically minimal adjacency code over all vertex orders that are
/// compatible with the stable degree-refined partition. Cells are split by
/// individualizing each vertex of the first non-singleton cell in turn, then
/// refining again; every leaf of that search tree is compared. Exponential
/// only in the number of individualizations a graph needs, which for the
/// sparse graphs here (n <= 20) is small.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Copy of g with vertex i being order[i] of its canonical labeling.
Graph canonical_relabel(const Graph& g);

}  // namespace ricci
