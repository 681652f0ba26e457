#include <gtest/gtest.h>

#include <random>

#include "ricci/canonical.hpp"
#include "ricci/generators.hpp"
#include "test_util.hpp"

namespace ricci {
namespace {

using testing::brute_isomorphic;
using testing::permuted;

TEST(CanonicalTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(59);
  for (const Graph& g : {petersen_graph(), dodecahedral_graph(), cycle_graph(9), grid_graph(3, 4)}) {
    const CanonicalForm f = canonical_form(g);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(canonical_form(permuted(g, rng)), f);
  }
}

TEST(CanonicalTest, LabelingIsAPermutation) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(9, 0.3, rng);
    const auto lab = canonical_labeling(g);
    std::vector<Vertex> sorted = lab.order;
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v = 0; v < g.num_vertices(); ++v) ASSERT_EQ(sorted[v], v);
    const Graph h = canonical_relabel(g);
    EXPECT_TRUE(brute_isomorphic(g, h));
    EXPECT_EQ(canonical_form(h), lab.form);
  }
}

TEST(CanonicalTest, AgreesWithBacktrackingIsomorphism) {
  std::mt19937_64 rng(67);
  std::size_t iso = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 4 + trial % 7;
    const Graph a = random_graph(n, 0.35, rng);
    // Even trials compare against a relabelled copy, odd ones against an
    // independent random graph.
    Graph b = permuted(a, rng);
    if (trial % 2 == 1) {
      b = random_graph(n, 0.35, rng);
    }
    const bool expected = brute_isomorphic(a, b);
    iso += expected;
    ASSERT_EQ(are_isomorphic(a, b), expected) << "trial " << trial;
  }
  EXPECT_GT(iso, 300u);
}

TEST(CanonicalTest, DistinguishesCospectralRegularGraphs) {
  // Both 3-regular on 10 vertices; only the Petersen graph has girth 5.
  const Graph p = petersen_graph();
  Graph prism(10);
  for (Vertex i = 0; i < 5; ++i) {
    prism.add_edge(i, (i + 1) % 5);
    prism.add_edge(5 + i, 5 + (i + 1) % 5);
    prism.add_edge(i, 5 + i);
  }
  EXPECT_FALSE(are_isomorphic(p, prism));
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), Graph(6)));
  Graph two_triangles(6);
  for (Vertex i = 0; i < 3; ++i) {
    two_triangles.add_edge(i, (i + 1) % 3);
    two_triangles.add_edge(3 + i, 3 + (i + 1) % 3);
  }
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
}

}  // namespace
}  // namespace ricci
