#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "ricci/curvature.hpp"
#include "ricci/root_lattice.hpp"
#include "ricci/transport.hpp"

namespace ricci {
namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

// Word-length ball of radius r by plain vector breadth-first search.
std::set<IntVector> oracle_ball(const std::vector<IntVector>& gens, int r) {
  const IntVector zero(gens.front().size(), 0);
  std::set<IntVector> seen{zero};
  std::vector<IntVector> frontier{zero};
  for (int step = 0; step < r; ++step) {
    std::vector<IntVector> next;
    for (const auto& p : frontier) {
      for (const auto& s : gens) {
        IntVector w = p;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += s[i];
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

TEST(RootSystemTest, Counts) {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"A1", 2},  {"A2", 6},  {"A3", 12}, {"B2", 8},  {"B3", 18},  {"C2", 8},   {"C3", 18},
      {"D4", 24}, {"F4", 48}, {"E6", 72}, {"E7", 126}, {"E8", 240}, {"A1+A1", 4}, {"A2A1", 8}};
  for (const auto& [label, count] : expected) {
    const RootSystem r = generate_roots(label);
    EXPECT_EQ(r.roots.size(), count) << label;
    std::size_t sum = 0;
    for (const auto& c : r.components) sum += expected_root_count(c);
    EXPECT_EQ(sum, count) << label;
  }
}

TEST(RootSystemTest, LengthsNegationAndSimpleCoordinates) {
  for (const char* label : {"A3", "B3", "C3", "D4", "F4", "E6", "A1+B2"}) {
    const RootSystem r = generate_roots(label);
    const std::set<IntVector> all(r.roots.begin(), r.roots.end());
    EXPECT_EQ(all.size(), r.roots.size()) << label;
    if (r.has_two_lengths()) EXPECT_EQ(r.squared_lengths[1], 2 * r.squared_lengths[0]) << label;
    for (const auto& v : r.roots) {
      EXPECT_TRUE(all.count(-1 * v)) << label;
      const auto len = dot(v, v);
      EXPECT_TRUE(len == r.squared_lengths.front() || len == r.squared_lengths.back()) << label;
      const auto c = to_simple_coordinates(r, v);
      ASSERT_TRUE(c.has_value()) << label;
      EXPECT_EQ(from_simple_coordinates(r, *c), v);
      bool nonneg = true, nonpos = true;
      for (auto x : *c) {
        nonneg = nonneg && x >= 0;
        nonpos = nonpos && x <= 0;
      }
      EXPECT_TRUE(nonneg || nonpos) << label;
    }
  }
}

TEST(RootSystemTest, Refusals) {
  try {
    generate_roots("G2");
    FAIL() << "G2 accepted";
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("G2 is not supported"), std::string::npos);
  }
  EXPECT_THROW(generate_roots("D1"), std::domain_error);
  EXPECT_THROW(generate_roots("E9"), std::domain_error);
  EXPECT_THROW(generate_roots("E5"), std::domain_error);
  // B2 short, B2 long = C2 short, C2 long.
  EXPECT_THROW(generate_roots("B2+C2"), std::domain_error);
  EXPECT_EQ(generate_roots("B2+F4").squared_lengths.size(), 2u);
  EXPECT_THROW(generate_roots("X3"), std::invalid_argument);
  EXPECT_THROW(generate_roots(""), std::invalid_argument);
}

TEST(IntegerLatticeTest, ReduceIsCanonical) {
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<std::int64_t> coef(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IntVector> gens(3, IntVector(3));
    for (auto& g : gens)
      for (auto& x : g) x = coef(rng);
    const IntegerLattice lat(3, gens);
    for (const auto& g : gens) EXPECT_TRUE(lat.contains(g));
    for (int i = 0; i < 10; ++i) {
      IntVector v(3);
      for (auto& x : v) x = coef(rng);
      IntVector w = v;
      for (const auto& g : gens) w = w + coef(rng) * g;
      ASSERT_EQ(lat.reduce(v), lat.reduce(w));
      EXPECT_EQ(lat.reduce(lat.reduce(v)), lat.reduce(v));
      EXPECT_TRUE(lat.contains(v - lat.reduce(v)));
    }
  }
  const IntegerLattice even(2, {{2, 0}, {0, 2}});
  EXPECT_EQ(even.rank(), 2u);
  EXPECT_EQ(even.reduce({-3, 5}), (IntVector{1, 1}));
  EXPECT_FALSE(even.contains({1, 0}));
}

TEST(LatticeSpecTest, Validation) {
  const RootSystem b2 = generate_roots("B2");
  EXPECT_EQ(full_lattice_spec("B2").generators.size(), 8u);
  EXPECT_THROW(make_lattice_spec(b2, {}), std::domain_error);
  EXPECT_THROW(make_lattice_spec(b2, {{2, 0}}), std::domain_error);
  EXPECT_THROW(make_lattice_spec(b2, {{2, 0}, {-2, 0}, {3, 0}, {-3, 0}}), std::domain_error);
  // Long roots alone span an index-2 sublattice.
  EXPECT_THROW(make_lattice_spec(b2, {{2, 2}, {-2, -2}, {2, -2}, {-2, 2}}), std::domain_error);
  EXPECT_EQ(make_lattice_spec(b2, {{2, 0}, {-2, 0}, {0, 2}, {0, -2}}).generators.size(), 4u);
}

TEST(CayleyBallTest, MatchesOracle) {
  EXPECT_EQ(cayley_ball(full_lattice_spec("A1+A1"), 3).graph.num_vertices(), 25u);
  EXPECT_EQ(cayley_ball(full_lattice_spec("A2"), 1).graph.num_vertices(), 7u);
  EXPECT_EQ(cayley_ball(full_lattice_spec("B2"), 1).graph.num_vertices(), 9u);
  EXPECT_THROW(cayley_ball(full_lattice_spec("A2"), -1), std::domain_error);

  for (const char* label : {"A1+A1", "A2", "B2", "C2", "A3"}) {
    const LatticeSpec spec = full_lattice_spec(label);
    const auto ball = cayley_ball(spec, 3);
    const auto oracle = oracle_ball(spec.generators, 3);
    EXPECT_EQ(std::set<IntVector>(ball.points.begin(), ball.points.end()), oracle) << label;
    for (Vertex v = 0; v < ball.graph.num_vertices(); ++v) {
      EXPECT_EQ(ball.graph.is_interior(v), ball.depth[v] <= 1);
      for (Vertex w : ball.graph.neighbors(v)) {
        const IntVector d = ball.points[w] - ball.points[v];
        EXPECT_TRUE(std::binary_search(spec.generators.begin(), spec.generators.end(), d));
      }
    }
  }
}

TEST(LatticePairTest, AgreesWithBallCurvature) {
  for (const char* label : {"A1+A1", "A2", "B2", "C2"}) {
    const LatticeSpec spec = full_lattice_spec(label);
    const auto ball = cayley_ball(spec, 4);
    const IntVector zero(spec.system.dimension, 0);
    for (const auto& s : spec.generators) {
      const auto pair = lattice_pair_neighborhood(spec, zero, s);
      const Rational from_pair = kappa(pair.neighborhood).kappa;
      const Rational from_ball = kappa(ball.graph, ball.index.at(zero), ball.index.at(s)).kappa;
      EXPECT_EQ(from_pair, from_ball) << label;
      EXPECT_EQ(from_pair, 0) << label;
    }
  }
}

TEST(DistanceHypothesisTest, Examples) {
  const LatticeSpec z2 = full_lattice_spec("A1+A1");
  const auto r = distance_hypothesis_check(z2, z2.generators.front(), 5);
  EXPECT_TRUE(r.ok);
  ASSERT_EQ(r.witnesses.size(), 5u);
  EXPECT_EQ(r.witnesses.back().distance, 5);
  EXPECT_FALSE(r.inner_product_checked);

  const LatticeSpec b2 = full_lattice_spec("B2");
  const auto shorter = distance_hypothesis_check(b2, {2, 0}, 4);
  EXPECT_TRUE(shorter.ok);
  EXPECT_TRUE(shorter.inner_product_checked);
  EXPECT_TRUE(shorter.inner_product_ok);
  EXPECT_TRUE(distance_hypothesis_check(b2, {2, 2}, 4).ok);
  EXPECT_THROW(distance_hypothesis_check(b2, {4, 0}, 4), std::domain_error);
}

TEST(TranslationCouplingTest, CostsOne) {
  const LatticeSpec z2 = full_lattice_spec("A1+A1");
  const IntVector zero(z2.system.dimension, 0);
  for (const Rational& alpha : {q(1, 2), q(1), q(0)}) {
    const auto t = translation_coupling(z2, zero, z2.generators.front(), alpha);
    EXPECT_EQ(t.cost, 1);
    EXPECT_TRUE(t.verification.ok);
    std::map<Vertex, Rational> rows, cols;
    for (const auto& [uv, mass] : t.coupling.entries) {
      rows[uv.first] += mass;
      cols[uv.second] += mass;
    }
    for (const auto& [v, mass] : rows) EXPECT_EQ(mass, t.from(v));
    for (const auto& [v, mass] : cols) EXPECT_EQ(mass, t.to(v));
  }
  const LatticeSpec a2 = full_lattice_spec("A2");
  const IntVector origin(a2.system.dimension, 0);
  const auto t = translation_coupling(a2, origin, a2.generators.back(), q(2, 3));
  EXPECT_EQ(t.cost, 1);
  const auto lp = solve_transport(t.from, t.to, t.pair.neighborhood.metric);
  EXPECT_EQ(lp.cost, t.cost);
  EXPECT_THROW(translation_coupling(a2, origin, origin, q(1, 2)), std::domain_error);
}

TEST(LatticeFlatnessTest, LowRankSweeps) {
  for (const char* label : {"A1+A1", "A2", "B2"}) {
    const auto r = lattice_flatness_check(full_lattice_spec(label), 5, 2);
    EXPECT_TRUE(r.flat()) << label;
    EXPECT_GT(r.edges_checked, 0u);
  }
  EXPECT_THROW(lattice_flatness_check(full_lattice_spec("A2"), 3), std::domain_error);
  EXPECT_THROW(lattice_flatness_check(full_lattice_spec("E6"), 5), std::domain_error);
}

TEST(LatticeFlatnessTest, OrbitRepresentatives) {
  EXPECT_EQ(orbit_representatives(full_lattice_spec("A2")).size(), 1u);
  EXPECT_EQ(orbit_representatives(full_lattice_spec("B2")).size(), 2u);
  EXPECT_EQ(orbit_representatives(full_lattice_spec("A1+B2")).size(), 3u);
  for (const char* label : {"D4", "F4"}) {
    const LatticeSpec spec = full_lattice_spec(label);
    for (const auto& [s, k] : lattice_orbit_curvatures(spec, orbit_representatives(spec), 2))
      EXPECT_EQ(k, 0) << label;
  }
}

TEST(QuotientTest, TorusAndTriangularQuotients) {
  const RootSystem z2 = generate_roots("A1+A1");
  const auto torus = quotient_graph({full_lattice_spec("A1+A1"), parse_sublattice(z2, "8 0; 0 8")});
  EXPECT_EQ(torus.graph.num_vertices(), 64u);
  EXPECT_EQ(torus.graph.num_edges(), 128u);
  EXPECT_TRUE(is_ricci_flat(torus.graph).flat);

  const RootSystem a2 = generate_roots("A2");
  const auto tri = quotient_graph({full_lattice_spec("A2"), parse_sublattice(a2, "7 0; 0 7")});
  EXPECT_EQ(tri.graph.num_vertices(), 49u);
  EXPECT_EQ(tri.graph.num_edges(), 147u);
  EXPECT_TRUE(is_ricci_flat(tri.graph).flat);
  for (Vertex v = 0; v < tri.graph.num_vertices(); ++v)
    EXPECT_EQ(tri.vertex_of(tri.representatives[v]), v);
}

TEST(QuotientTest, Refusals) {
  const RootSystem z2 = generate_roots("A1+A1");
  try {
    quotient_graph({full_lattice_spec("A1+A1"), parse_sublattice(z2, "4 0; 0 4")});
    FAIL() << "short sublattice accepted";
  } catch (const QuotientRefused& e) {
    EXPECT_EQ(e.distance(), 4);
  }
  EXPECT_THROW(quotient_graph({full_lattice_spec("A1+A1"), parse_sublattice(z2, "8 0; 16 0")}),
               std::domain_error);
  EXPECT_THROW(quotient_graph({full_lattice_spec("A1+A1"), parse_sublattice(z2, "8 0")}),
               std::domain_error);
  EXPECT_THROW(parse_sublattice(z2, "8 x; 0 8"), std::invalid_argument);
  EXPECT_THROW(parse_sublattice(z2, "8 0 0; 0 8"), std::invalid_argument);
}

TEST(QuotientTest, ProjectionIsAStrongCover) {
  const RootSystem z2 = generate_roots("A1+A1");
  const auto big = quotient_graph({full_lattice_spec("A1+A1"), parse_sublattice(z2, "16 0; 0 16")});
  const auto small = quotient_graph({full_lattice_spec("A1+A1"), parse_sublattice(z2, "8 0; 0 8")});
  const CoverMap f = quotient_projection(big, small);
  EXPECT_TRUE(strong_cover_check(f).ok);
  EXPECT_TRUE(cover_flatness_transfer(f).ok());
  EXPECT_THROW(quotient_projection(small, big), std::domain_error);
}

}  // namespace
}  // namespace ricci
