#include <gtest/gtest.h>

#include "estrada/extremal.hpp"
#include "estrada/families.hpp"
#include "estrada/invariants.hpp"
#include "oracles.hpp"

using namespace estrada;

TEST(Matching, Examples) {
  EXPECT_EQ(matching_number(complete_bipartite(2, 3)), 2);
  EXPECT_EQ(matching_number(path_graph(4)), 2);
  EXPECT_EQ(matching_number(empty_graph(5)), 0);
  EXPECT_EQ(matching_number(cycle_graph(5)), 2);  // non-bipartite fallback
}

TEST(Matching, AgreesWithEdgeSubsetOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      ASSERT_EQ(matching_number(g), oracle::matching_by_edge_subsets(g)) << emit_graph6(g);
}

TEST(Matching, RejectsLargeNonBipartite) {
  EXPECT_THROW(matching_number(cycle_graph(21)), InvalidInput);
  EXPECT_EQ(matching_number(cycle_graph(22)), 11);
}

TEST(Cover, CompleteBipartiteWitnessIsSmallSide) {
  const auto c = covering_number(complete_bipartite(2, 3));
  EXPECT_EQ(c.size, 2);
  EXPECT_EQ(c.vertices, bit(0) | bit(1));
}

TEST(Cover, ThreeDisjointEdges) {
  const Graph g = Graph::Builder(6).edge(0, 1).edge(2, 3).edge(4, 5).build();
  EXPECT_EQ(covering_number(g).size, 3);
}

TEST(Cover, RejectsNonBipartite) { EXPECT_THROW(covering_number(cycle_graph(3)), InvalidInput); }

TEST(Cover, KonigEqualityExhaustive) {
  for (int n = 2; n <= 7; ++n) {
    enumerate_bipartite(n, false, [&](const Graph& g, std::uint64_t) {
      const auto c = covering_number(g);
      ASSERT_EQ(c.size, popcount(c.vertices));
      for (auto [u, v] : g.edges()) ASSERT_TRUE(((c.vertices >> u) | (c.vertices >> v)) & 1U);
      ASSERT_EQ(c.size, matching_number(g)) << emit_graph6(g);
    });
  }
}

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(complete_bipartite(3, 4)), 3);
  EXPECT_EQ(vertex_connectivity(path_graph(4)), 1);
  EXPECT_EQ(vertex_connectivity(Graph(1)), 0);
  EXPECT_EQ(vertex_connectivity(path_graph(2)), 1);
  EXPECT_EQ(vertex_connectivity(empty_graph(3)), 0);
}

TEST(VertexConnectivity, JoinFamilyAgainstSubsetOracle) {
  const Graph g = join_family(2, 3, 2);
  ASSERT_EQ(g.order(), 8);
  EXPECT_EQ(oracle::vertex_connectivity_by_subsets(g), 2);
  EXPECT_EQ(vertex_connectivity(g), 2);
}

TEST(VertexConnectivity, CompleteGraphIsOrderMinusOne) {
  Graph::Builder b(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) b.edge(i, j);
  EXPECT_EQ(vertex_connectivity(b.build()), 4);
}

TEST(EdgeConnectivity, Examples) {
  const Graph k34 = complete_bipartite(3, 4);
  EXPECT_EQ(oracle::edge_connectivity_by_subsets(k34, 3), 3);
  EXPECT_EQ(edge_connectivity(k34), 3);
  EXPECT_EQ(edge_connectivity(path_graph(4)), 1);
  EXPECT_EQ(edge_connectivity(empty_graph(2)), 0);
  EXPECT_EQ(edge_connectivity(Graph(1)), 0);
}

TEST(Connectivity, AgreesWithSubsetOraclesUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      const int kappa = vertex_connectivity(g), lambda = edge_connectivity(g);
      ASSERT_EQ(kappa, oracle::vertex_connectivity_by_subsets(g)) << emit_graph6(g);
      ASSERT_EQ(lambda, oracle::edge_connectivity_by_subsets(g, g.min_degree())) << emit_graph6(g);
      if (is_connected(g) && n > 1) {
        EXPECT_LE(kappa, lambda);
        EXPECT_LE(lambda, g.min_degree());
      }
    }
  }
}

TEST(Connectivity, WhitneyChainOnBipartiteSevens) {
  enumerate_bipartite(7, true, [](const Graph& g, std::uint64_t) {
    const int kappa = vertex_connectivity(g), lambda = edge_connectivity(g);
    ASSERT_LE(kappa, lambda);
    ASSERT_LE(lambda, g.min_degree());
  });
}

TEST(ClassDescriptor, Validation) {
  EXPECT_NO_THROW((ClassDescriptor{ClassKind::matching, 6, 3}.validate()));
  EXPECT_THROW((ClassDescriptor{ClassKind::matching, 6, 4}.validate()), InvalidInput);
  EXPECT_THROW((ClassDescriptor{ClassKind::matching, 6, 0}.validate()), InvalidInput);
  EXPECT_THROW((ClassDescriptor{ClassKind::vertex_connectivity, 6, 0}.validate()), InvalidInput);
  EXPECT_EQ(to_string(ClassKind::vertex_connectivity), "vertex-connectivity");
  EXPECT_EQ(to_string(ClassKind::edge_connectivity), "edge-connectivity");
}

TEST(ClassValue, Dispatch) {
  const Graph g = join_family(1, 3, 2);
  EXPECT_EQ(class_value(g, ClassKind::matching), matching_number(g));
  EXPECT_EQ(class_value(g, ClassKind::vertex_connectivity), 1);
  EXPECT_EQ(class_value(g, ClassKind::edge_connectivity), 1);
}
