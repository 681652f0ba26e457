#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

// ---------------------------------------------------------------------------
// Local structure of flat edges in graphs without 3- and 4-cycles.

enum class Lemma3CaseId {
  kDeg22NoC5,       // d_x = d_y = 2 and xy lies on no 5-cycle
  kDeg33TwoC5,      // d_x = d_y = 3 and xy lies on at least two 5-cycles
  kDeg23Distances,  // d_x = 2, d_y = 3, {d(x1,y1), d(x1,y2)} = {2,3}
  kDeg24Distances,  // d_x = 2, d_y = 4, at least two y_i at distance 2 from x1
  kViolation,
};

const char* to_string(Lemma3CaseId id);

struct Lemma3Case {
  Vertex x = 0;  // endpoint of smaller degree
  Vertex y = 0;
  Lemma3CaseId id = Lemma3CaseId::kViolation;
};

/// nullopt when e lies on a 3- or 4-cycle. Every flat edge of such a graph
/// classifies to a non-violation case.
std::optional<Lemma3Case> lemma3_classify(const Graph& g, const Edge& e);

/// All k-cycles of g, each as a sorted vertex set.
std::vector<std::vector<Vertex>> cycles_of_length(const Graph& g, int k);

// Structural facts about flat girth-5 graphs.
/// No vertex of degree 4.
bool no_degree_four(const Graph& g);
/// No 5-cycle contains two vertices of degree 2.
bool no_pentagon_with_two_degree_two(const Graph& g);
/// For every edge xy with d_x = 2, d_y = 3, the other two neighbours of y
/// have degrees {2, 3}.
bool degree_two_three_neighbors(const Graph& g);

// ---------------------------------------------------------------------------
// The graphs of the girth >= 5 classification.

enum class GraphFamily { kCycle, kPath, kPetersen, kDodecahedral, kHalfDodecahedral };

struct NamedGraph {
  GraphFamily family = GraphFamily::kCycle;
  std::size_t parameter = 0;  // n for cycles and path windows
  std::string name;
  Graph graph;
};

/// kPath yields infinite_path_window(n). Throws std::domain_error on bad
/// parameters (cycles need n >= 3, path windows n >= 6).
NamedGraph named_graph(GraphFamily family, std::size_t n = 0);

/// Accepts "C6", "cycle(6)", "P50", "path(50)", "petersen", "dodecahedral",
/// "half_dodecahedral" and, outside the classification, "K4", "complete(4)",
/// "K1,3", "star(3)", "grid(4,5)" and "finite_path(7)". Throws
/// std::invalid_argument for unknown names.
Graph graph_by_name(const std::string& name);

/// Pentagon-forcing expansion seeded by a degree-2 vertex on a 5-cycle
/// whose other four vertices have degree 3.
///
/// A depth-first completion grows the seed one incidence at a time: the
/// lowest unsaturated vertex gains either an edge to an existing unsaturated
/// vertex at distance >= 4 or a fresh neighbour of target degree 2 or 3.
/// An edge whose N(x) ∪ N(y) is saturated has final curvature and must be
/// flat. Vertex budgets are tried in increasing order; the first completed
/// graph is returned after checking girth 5, degrees {2, 3} and flatness.
/// The result is cached.
const Graph& half_dodecahedral_graph();

struct ExpansionStats {
  std::size_t states = 0;
  std::size_t budget = 0;
};
/// Runs the expansion from scratch with a vertex budget cap; nullopt when no
/// completion exists within it.
std::optional<Graph> run_half_dodecahedral_expansion(std::size_t max_vertices,
                                                     ExpansionStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Exhaustive search.

inline constexpr int kMaxSearchOrder = 12;

struct SearchStats {
  /// connected[n]: connected graphs of order n with girth >= 5 and maximum
  /// degree <= 4, up to isomorphism (the last order only counts candidates
  /// with minimum degree >= 2).
  std::vector<std::size_t> connected;
  std::size_t flatness_checks = 0;
};

/// Every connected Ricci-flat graph of girth >= 5 on at most n_max vertices,
/// up to isomorphism, canonically relabelled and sorted by (order, code).
///
/// Graphs are grown one vertex at a time, since every connected graph is a
/// connected graph plus a non-cut vertex; the new vertex joins a set of
/// pairwise distance >= 3 so girth stays >= 5. Degree >= 5 is never needed:
/// flat graphs have no leaves, and an edge from a vertex of degree >= 2 to
/// one of degree >= 5 on no short cycle has negative curvature. Duplicates
/// are removed per order by canonical form. Throws std::domain_error when
/// n_max > kMaxSearchOrder.
std::vector<Graph> exhaustive_search(int n_max, unsigned jobs = 1, SearchStats* stats = nullptr);

// ---------------------------------------------------------------------------

enum class Theorem1Member {
  kInfinitePathSegment,
  kCycle,
  kDodecahedral,
  kPetersen,
  kHalfDodecahedral,
  kNone,
};

const char* to_string(Theorem1Member member);

/// Which family of the classification g belongs to. Paths only match when
/// marked as a window of the infinite path (both ends non-interior).
Theorem1Member theorem1_membership(const Graph& g);

}  // namespace ricci
