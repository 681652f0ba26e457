#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ricci/constructions.hpp"
#include "ricci/curvature.hpp"
#include "ricci/graph.hpp"
#include "ricci/transport.hpp"

namespace ricci {

using IntVector = std::vector<std::int64_t>;

enum class RootType { kA, kB, kC, kD, kE, kF };

struct RootComponent {
  RootType type = RootType::kA;
  int rank = 1;
};

/// Roots in exact integer coordinates, scaled by 2 so that the half-integer
/// vectors of E8 and F4 are integral. Squared lengths are therefore 4x the
/// usual ones. Direct sums place their summands in orthogonal blocks.
struct RootSystem {
  std::string label;
  std::vector<RootComponent> components;
  std::vector<std::size_t> offsets;  // first coordinate of each summand
  std::size_t dimension = 0;
  std::vector<IntVector> roots;         // sorted
  std::vector<IntVector> simple_roots;  // a basis of the root lattice
  std::vector<std::int64_t> squared_lengths;  // ascending, one or two values

  std::size_t rank() const { return simple_roots.size(); }
  std::int64_t short_squared_length() const { return squared_lengths.front(); }
  bool has_two_lengths() const { return squared_lengths.size() == 2; }
  /// Index of the summand a root belongs to.
  std::size_t component_of(const IntVector& root) const;
};

/// Root counts of the irreducible types.
std::size_t expected_root_count(RootComponent c);

/// Accepts "A3", "B2", "C4", "D4", "F4", "E6", "E7", "E8" and direct sums
/// written "A1+A1" or "A1A1". Throws std::domain_error for G2, for ranks a
/// type does not have, and for sums with three root lengths;
/// std::invalid_argument for labels that do not parse. The count, negation,
/// length-ratio and inner-product invariants are checked before returning
/// (std::logic_error on failure).
RootSystem generate_roots(const std::string& label);

std::int64_t dot(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(std::int64_t k, const IntVector& a);

/// Coefficients of v in the simple roots, or nullopt when v is not an
/// integer combination of them.
std::optional<IntVector> to_simple_coordinates(const RootSystem& system, const IntVector& v);
IntVector from_simple_coordinates(const RootSystem& system, const IntVector& coefficients);

/// Integer lattice inside Z^d kept in echelon form with positive pivots.
/// Reducing each pivot entry into [0, pivot) in order gives every coset a
/// canonical representative.
class IntegerLattice {
 public:
  IntegerLattice(std::size_t dimension, const std::vector<IntVector>& generators);

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<IntVector>& basis() const { return rows_; }

  bool contains(const IntVector& v) const { return is_zero(reduce(v)); }
  /// Canonical representative of v modulo the lattice.
  IntVector reduce(IntVector v) const;

 private:
  static bool is_zero(const IntVector& v);

  std::size_t dimension_;
  std::vector<IntVector> rows_;  // echelon form, positive pivots
  std::vector<std::size_t> pivots_;
};

/// Generating set of a lattice Cayley graph.
struct LatticeSpec {
  RootSystem system;
  std::vector<IntVector> generators;  // sorted
};

/// Throws std::domain_error unless S is nonempty, consists of roots,
/// satisfies S = -S, and generates the root lattice.
LatticeSpec make_lattice_spec(RootSystem system, std::vector<IntVector> generators);
/// S = R.
LatticeSpec full_lattice_spec(const std::string& label);
/// Picks roots by index into system.roots (sorted order), adding negatives.
LatticeSpec lattice_spec_from_indices(const std::string& label, const std::vector<std::size_t>& indices);

struct LatticeBall {
  Graph graph;
  std::vector<IntVector> points;  // points[v] is the lattice vector of vertex v
  std::map<IntVector, Vertex> index;
  std::vector<int> depth;         // distance from the origin
  int radius = 0;
};

/// Ball of the Cayley graph around the origin in breadth-first order. Vertices
/// at distance <= radius - 2 are interior. Throws std::domain_error for a
/// negative radius.
LatticeBall cayley_ball(const LatticeSpec& spec, int radius);

/// Curvature data of the lattice pair (x, y) computed from translates of
/// the generators. Vertex ids index `points`.
struct LatticePair {
  std::vector<IntVector> points;
  PairNeighborhood neighborhood;
};
LatticePair lattice_pair_neighborhood(const LatticeSpec& spec, const IntVector& x, const IntVector& y);

struct DistanceWitness {
  int n = 0;
  int distance = 0;  // d(0, n s)
};

struct DistanceHypothesisReport {
  bool ok = true;
  std::vector<DistanceWitness> witnesses;
  /// ⟨u, v⟩ <= l^2 for every u in S, checked when s is a shorter root of a
  /// two-length system.
  bool inner_product_checked = false;
  bool inner_product_ok = true;
  std::vector<std::string> failures;
};

/// d(0, n s) = n for 1 <= n <= n_max, by breadth-first search; translation
/// invariance makes the origin stand for every x. Throws std::domain_error
/// when s is not a generator.
DistanceHypothesisReport distance_hypothesis_check(const LatticeSpec& spec, const IntVector& s,
                                                   int n_max);

struct TranslationCoupling {
  LatticePair pair;
  Measure from;
  Measure to;
  Coupling coupling;
  Rational cost;
  Verification verification;
};

/// Moves the mass of m_x^alpha at u to u + (y - x); every unit travels one
/// generator step, so the cost is exactly 1. Throws std::domain_error when
/// y - x is not a generator.
TranslationCoupling translation_coupling(const LatticeSpec& spec, const IntVector& x,
                                         const IntVector& y, const Rational& alpha);

struct LatticeFlatnessReport {
  std::size_t vertices = 0;
  std::size_t edges_checked = 0;
  std::vector<std::pair<Edge, Rational>> non_flat;
  bool flat() const { return non_flat.empty(); }
};

inline constexpr std::size_t kMaxSweepRank = 4;

/// κ on every interior edge of cayley_ball(spec, radius). Refuses
/// (std::domain_error) radius < 4, and ranks above kMaxSweepRank where
/// lattice_orbit_curvatures is the practical check.
LatticeFlatnessReport lattice_flatness_check(const LatticeSpec& spec, int radius, unsigned jobs = 1);

/// One generator per Weyl orbit (irreducible summand and root length) when S
/// is the full root system; every generator otherwise.
std::vector<IntVector> orbit_representatives(const LatticeSpec& spec);

/// κ(0, s) for the given generators (all of S when empty). Every edge of the
/// Cayley graph is a translate of one of these.
std::vector<std::pair<IntVector, Rational>> lattice_orbit_curvatures(
    const LatticeSpec& spec, std::vector<IntVector> generators = {}, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Quotients.

struct QuotientSpec {
  LatticeSpec spec;
  std::vector<IntVector> sublattice_basis;  // ambient coordinates
};

/// Rows in simple-root coordinates separated by ';', e.g. "8 0; 0 8".
/// Throws std::invalid_argument on malformed input.
std::vector<IntVector> parse_sublattice(const RootSystem& system, const std::string& text);

inline constexpr int kMinCosetDistance = 6;

class QuotientRefused : public std::domain_error {
 public:
  QuotientRefused(const std::string& what, IntVector element, int distance)
      : std::domain_error(what), element_(std::move(element)), distance_(distance) {}
  const IntVector& element() const { return element_; }
  int distance() const { return distance_; }

 private:
  IntVector element_;
  int distance_;
};

struct QuotientGraph {
  Graph graph;
  std::vector<IntVector> representatives;  // canonical, one per vertex
  IntegerLattice sublattice;
  std::map<IntVector, Vertex> index;

  Vertex vertex_of(const IntVector& v) const { return index.at(sublattice.reduce(v)); }
};

/// Cayley graph of G / G' on canonical coset representatives; u + G' and
/// v + G' are adjacent iff u - v lies in S + G'. Refuses with
/// QuotientRefused when a nonzero element of G' lies within distance
/// kMinCosetDistance - 1 of the origin; std::domain_error when the basis is
/// dependent, not in the root lattice, or of infinite index.
QuotientGraph quotient_graph(const QuotientSpec& q);

/// The map x + G'_from -> x + G'_to between quotients of the same Cayley
/// graph. Throws std::domain_error unless G'_from is contained in G'_to.
CoverMap quotient_projection(const QuotientGraph& from, const QuotientGraph& to);

}  // namespace ricci
