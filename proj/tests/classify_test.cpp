#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "ricci/canonical.hpp"
#include "ricci/classify.hpp"
#include "ricci/curvature.hpp"
#include "ricci/generators.hpp"
#include "ricci/graph_io.hpp"
#include "test_util.hpp"

namespace ricci {
namespace {

using testing::brute_cycles_through;
using testing::brute_isomorphic;
using testing::floyd_warshall;
using testing::kInf;
using testing::pentagon_cap;

std::optional<Lemma3CaseId> case_of(const Graph& g, Vertex a, Vertex b) {
  const auto c = lemma3_classify(g, Edge(a, b));
  if (!c) return std::nullopt;
  return c->id;
}

// x = 0 of degree 2 with neighbours y = 1 and x1 = 2; y has further
// neighbours 3, 4, 5. Each entry of `near` gets a path of length 2 to x1.
Graph deg24_configuration(const std::vector<Vertex>& near) {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  for (Vertex v : {3, 4, 5}) g.add_edge(1, v);
  for (Vertex v : near) {
    const Vertex w = g.add_vertex();
    g.add_edge(2, w);
    g.add_edge(w, v);
  }
  return g;
}

TEST(FlatEdgeCaseTest, Examples) {
  EXPECT_EQ(case_of(cycle_graph(6), 0, 1), Lemma3CaseId::kDeg22NoC5);
  EXPECT_EQ(case_of(cycle_graph(5), 0, 1), Lemma3CaseId::kViolation);
  EXPECT_EQ(case_of(petersen_graph(), 0, 1), Lemma3CaseId::kDeg33TwoC5);
  EXPECT_EQ(case_of(complete_graph(3), 0, 1), std::nullopt);
  EXPECT_EQ(case_of(cycle_graph(4), 0, 1), std::nullopt);

  const Graph& half = half_dodecahedral_graph();
  const auto c = lemma3_classify(half, Edge(0, 1));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->id, Lemma3CaseId::kDeg23Distances);
  EXPECT_EQ(c->x, 0u);
  EXPECT_EQ(c->y, 1u);

  EXPECT_THROW(lemma3_classify(cycle_graph(6), Edge(0, 2)), std::domain_error);
  EXPECT_STREQ(to_string(Lemma3CaseId::kDeg24Distances), "deg24-distances");
}

TEST(FlatEdgeCaseTest, DegreeTwoFourConfigurations) {
  EXPECT_EQ(case_of(deg24_configuration({3, 4}), 0, 1), Lemma3CaseId::kDeg24Distances);
  EXPECT_EQ(case_of(deg24_configuration({3, 4, 5}), 0, 1), Lemma3CaseId::kDeg24Distances);
  EXPECT_EQ(case_of(deg24_configuration({3}), 0, 1), Lemma3CaseId::kViolation);
  EXPECT_EQ(case_of(deg24_configuration({}), 0, 1), Lemma3CaseId::kViolation);
  // Degree 3 against degree 4 is never flat-compatible.
  Graph g = deg24_configuration({3, 4});
  g.add_edge(0, g.add_vertex());
  EXPECT_EQ(case_of(g, 0, 1), Lemma3CaseId::kViolation);
}

TEST(FlatEdgeCaseTest, FlatEdgesNeverViolate) {
  std::mt19937_64 rng(71);
  std::size_t flat_edges = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_girth5_graph(8 + trial % 8, 3 + trial % 6, rng);
    for (const auto& r : edge_curvatures(g)) {
      if (r.kappa != 0) continue;
      ++flat_edges;
      const auto c = lemma3_classify(g, r.edge());
      ASSERT_TRUE(c.has_value());
      ASSERT_NE(c->id, Lemma3CaseId::kViolation) << "trial " << trial;
    }
  }
  EXPECT_GT(flat_edges, 0u);
}

TEST(CyclesTest, CountsMatchEdgeEnumeration) {
  EXPECT_EQ(cycles_of_length(petersen_graph(), 5).size(), 12u);
  EXPECT_EQ(cycles_of_length(cycle_graph(5), 5), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}}));
  EXPECT_TRUE(cycles_of_length(cycle_graph(6), 5).empty());
  // On girth >= k graphs each k-set carries at most one k-cycle, so every
  // cycle is counted once per edge.
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_girth5_graph(10, 6, rng);
    int through = 0;
    for (const Edge& e : g.edges()) through += brute_cycles_through(g, e, 5);
    ASSERT_EQ(static_cast<int>(cycles_of_length(g, 5).size()) * 5, through);
  }
}

TEST(ClaimsTest, HoldOnFlatGraphsAndFailOnCounterexamples) {
  for (const Graph* g : {&half_dodecahedral_graph()}) {
    EXPECT_TRUE(no_degree_four(*g));
    EXPECT_TRUE(no_pentagon_with_two_degree_two(*g));
    EXPECT_TRUE(degree_two_three_neighbors(*g));
  }
  EXPECT_FALSE(no_degree_four(star_graph(4)));
  EXPECT_FALSE(no_pentagon_with_two_degree_two(cycle_graph(5)));
  // y = 1 of degree 3 next to x = 0 of degree 2, both other neighbours of y
  // of degree 3.
  Graph g(8);
  g.add_edge(0, 1);
  g.add_edge(0, 7);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 4);
  g.add_edge(2, 5);
  g.add_edge(3, 6);
  g.add_edge(3, 7);
  EXPECT_FALSE(degree_two_three_neighbors(g));
}

TEST(NamedGraphTest, FamiliesAreFlatAndHaveLargeGirth) {
  const std::vector<NamedGraph> graphs{
      named_graph(GraphFamily::kCycle, 6),  named_graph(GraphFamily::kCycle, 11),
      named_graph(GraphFamily::kPath, 12),  named_graph(GraphFamily::kPetersen),
      named_graph(GraphFamily::kDodecahedral), named_graph(GraphFamily::kHalfDodecahedral)};
  for (const auto& ng : graphs) {
    EXPECT_TRUE(is_connected(ng.graph)) << ng.name;
    const auto g = girth(ng.graph);
    if (g) EXPECT_GE(*g, 5) << ng.name;
    EXPECT_TRUE(is_ricci_flat(ng.graph).flat) << ng.name;
  }
  EXPECT_EQ(graphs[0].name, "cycle(6)");
  EXPECT_EQ(graphs[2].parameter, 12u);
  EXPECT_EQ(dodecahedral_graph().num_edges(), 30u);
  EXPECT_THROW(named_graph(GraphFamily::kCycle, 2), std::domain_error);
  EXPECT_THROW(named_graph(GraphFamily::kPath, 5), std::domain_error);
}

TEST(NamedGraphTest, ByName) {
  EXPECT_EQ(graph_by_name("C7"), cycle_graph(7));
  EXPECT_EQ(graph_by_name("cycle(7)"), cycle_graph(7));
  EXPECT_EQ(graph_by_name("P10"), infinite_path_window(10));
  EXPECT_FALSE(graph_by_name("path(10)").is_interior(0));
  EXPECT_EQ(graph_by_name("K1,3"), star_graph(3));
  EXPECT_EQ(graph_by_name("complete(4)"), complete_graph(4));
  EXPECT_EQ(graph_by_name("grid(2,3)").num_edges(), 7u);
  EXPECT_EQ(graph_by_name("finite_path(5)"), path_graph(5));
  EXPECT_EQ(graph_by_name("half-dodecahedral"), half_dodecahedral_graph());
  EXPECT_THROW(graph_by_name("heawood"), std::invalid_argument);
}

TEST(HalfDodecahedralTest, MatchesGoldenFileAndHandBuiltCap) {
  const Graph& g = half_dodecahedral_graph();
  EXPECT_EQ(g.num_vertices(), 15u);
  EXPECT_EQ(g.num_edges(), 20u);
  EXPECT_EQ(load_graph(TEST_DATA_DIR "/half_dodecahedral.edges"), g);
  EXPECT_TRUE(brute_isomorphic(g, pentagon_cap()));
  EXPECT_EQ(girth(g), 5);
  std::size_t deg2 = 0;
  for (Vertex v = 0; v < 15; ++v) deg2 += g.degree(v) == 2;
  EXPECT_EQ(deg2, 5u);
}

TEST(HalfDodecahedralTest, NoSmallerCompletion) {
  ExpansionStats stats;
  EXPECT_EQ(run_half_dodecahedral_expansion(14, &stats), std::nullopt);
  EXPECT_GT(stats.states, 0u);
}

// Every connected graph on n labelled vertices with girth >= 5 and maximum
// degree <= 4, grouped into isomorphism classes by backtracking.
std::vector<Graph> brute_girth5_classes(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::map<std::vector<std::size_t>, std::vector<Graph>> classes;
  Graph g(n);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == pairs.size()) {
      const auto d = floyd_warshall(g);
      for (Vertex v = 0; v < n; ++v)
        if (d[0][v] >= kInf) return;
      std::vector<std::size_t> key{g.num_edges()};
      for (Vertex v = 0; v < n; ++v) key.push_back(g.degree(v));
      std::sort(key.begin() + 1, key.end());
      auto& bucket = classes[key];
      for (const Graph& h : bucket)
        if (brute_isomorphic(g, h)) return;
      bucket.push_back(g);
      return;
    }
    walk(i + 1);
    const auto [a, b] = pairs[i];
    if (g.degree(a) >= 4 || g.degree(b) >= 4) return;
    // A new edge closes a cycle of length d(a, b) + 1.
    if (floyd_warshall(g)[a][b] < 4) return;
    Graph saved = g;
    g.add_edge(a, b);
    walk(i + 1);
    g = saved;
  };
  walk(0);
  std::vector<Graph> out;
  for (auto& [key, bucket] : classes) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

TEST(ExhaustiveSearchTest, CountsAgreeWithLabelledEnumeration) {
  constexpr int kTop = 7;
  SearchStats stats;
  const auto found = exhaustive_search(kTop, 1, &stats);
  for (std::size_t n = 1; n <= static_cast<std::size_t>(kTop); ++n) {
    const auto classes = brute_girth5_classes(n);
    std::size_t expected = 0;
    std::vector<Graph> flat;
    for (const Graph& g : classes) {
      bool min_deg2 = true;
      for (Vertex v = 0; v < n; ++v) min_deg2 = min_deg2 && g.degree(v) >= 2;
      if (n == static_cast<std::size_t>(kTop) && !min_deg2) continue;
      ++expected;
      if (n >= 2 && is_ricci_flat(g).flat) flat.push_back(g);
    }
    EXPECT_EQ(stats.connected[n], expected) << "order " << n;
    std::size_t searched = 0;
    for (const Graph& g : found) searched += g.num_vertices() == n;
    EXPECT_EQ(searched, flat.size()) << "order " << n;
    for (const Graph& f : flat) {
      bool hit = false;
      for (const Graph& g : found) hit = hit || brute_isomorphic(f, g);
      EXPECT_TRUE(hit) << "order " << n;
    }
  }
}

TEST(ExhaustiveSearchTest, SmallOrders) {
  EXPECT_TRUE(exhaustive_search(4).empty());
  const auto six = exhaustive_search(6);
  ASSERT_EQ(six.size(), 1u);
  EXPECT_TRUE(brute_isomorphic(six[0], cycle_graph(6)));
  EXPECT_THROW(exhaustive_search(kMaxSearchOrder + 1), std::domain_error);
}

TEST(ExhaustiveSearchTest, OrderTenResultSatisfiesTheStructureClaims) {
  SearchStats stats;
  const auto found = exhaustive_search(10, 2, &stats);
  ASSERT_EQ(found.size(), 6u);
  std::size_t cycles = 0, petersen = 0;
  for (const Graph& g : found) {
    EXPECT_EQ(canonical_relabel(g), g);
    EXPECT_TRUE(no_degree_four(g));
    EXPECT_TRUE(no_pentagon_with_two_degree_two(g));
    EXPECT_TRUE(degree_two_three_neighbors(g));
    for (const Edge& e : g.edges()) {
      const auto c = lemma3_classify(g, e);
      ASSERT_TRUE(c.has_value());
      EXPECT_NE(c->id, Lemma3CaseId::kViolation);
    }
    const auto member = theorem1_membership(g);
    cycles += member == Theorem1Member::kCycle;
    petersen += member == Theorem1Member::kPetersen;
  }
  EXPECT_EQ(cycles, 5u);
  EXPECT_EQ(petersen, 1u);
  EXPECT_GT(stats.flatness_checks, 0u);
}

TEST(MembershipTest, Examples) {
  std::mt19937_64 rng(79);
  EXPECT_EQ(theorem1_membership(petersen_graph()), Theorem1Member::kPetersen);
  EXPECT_EQ(theorem1_membership(testing::permuted(petersen_graph(), rng)), Theorem1Member::kPetersen);
  EXPECT_EQ(theorem1_membership(cycle_graph(9)), Theorem1Member::kCycle);
  EXPECT_EQ(theorem1_membership(cycle_graph(5)), Theorem1Member::kNone);
  EXPECT_EQ(theorem1_membership(infinite_path_window(9)), Theorem1Member::kInfinitePathSegment);
  EXPECT_EQ(theorem1_membership(path_graph(9)), Theorem1Member::kNone);
  EXPECT_EQ(theorem1_membership(dodecahedral_graph()), Theorem1Member::kDodecahedral);
  EXPECT_EQ(theorem1_membership(pentagon_cap()), Theorem1Member::kHalfDodecahedral);

  Graph cut(20);
  for (const Edge& e : dodecahedral_graph().edges())
    if (e != Edge(0, 1)) cut.add_edge(e.u, e.v);
  EXPECT_EQ(theorem1_membership(cut), Theorem1Member::kNone);
  EXPECT_STREQ(to_string(Theorem1Member::kInfinitePathSegment), "infinite-path-segment");
}

}  // namespace
}  // namespace ricci
