#include "commq/generators.hpp"

#include <set>

#include "gtest/gtest.h"
#include "testutil.hpp"

using commq::Graph;
using commq::input_error;
using commq::RingSpec;

TEST(CompleteGraph, EdgeCounts) {
  EXPECT_EQ(commq::complete_graph(8).edges().size(), 28u);
  EXPECT_EQ(commq::complete_graph(1).edges().size(), 0u);
  EXPECT_EQ(commq::complete_graph(4).edges().size(), 6u);
  EXPECT_THROW(commq::complete_graph(0), input_error);
}

TEST(TwoCliques, MaximalBridgingGivesCompleteGraph) {
  const commq::TwoCliques tc = commq::two_cliques(4, 16);
  EXPECT_EQ(tc.graph, commq::complete_graph(8));
}

TEST(TwoCliques, BridgeCountAndPartition) {
  const commq::TwoCliques tc = commq::two_cliques(4, 3);
  EXPECT_EQ(tc.graph.edges().size(), 15u);  // 6 + 6 + 3
  EXPECT_EQ(tc.communities.community_count(), 2u);
  EXPECT_THROW(commq::two_cliques(4, 17), input_error);
  EXPECT_THROW(commq::two_cliques(1, 0), input_error);
}

TEST(CliqueTreePair, ShapesMatchTheTable) {
  const commq::CliqueTreePair pair = commq::clique_pair_vs_tree_pair();
  EXPECT_EQ(pair.clique_graph.node_count(), 8u);
  EXPECT_EQ(pair.clique_graph.edges().size(), 13u);
  EXPECT_EQ(pair.tree_graph.node_count(), 14u);
  EXPECT_EQ(pair.tree_graph.edges().size(), 13u);
  EXPECT_EQ(pair.clique_communities.community_count(), 2u);
  EXPECT_EQ(pair.tree_communities.community_count(), 2u);
}

TEST(RingOfCliques, Counts) {
  const commq::RingOfCliques big = commq::ring_of_cliques(RingSpec{30, 5});
  EXPECT_EQ(big.graph.node_count(), 150u);
  EXPECT_EQ(big.graph.edges().size(), 330u);
  EXPECT_EQ(big.single_cliques.community_count(), 30u);
  EXPECT_EQ(big.paired_cliques.community_count(), 15u);

  const commq::RingOfCliques tiny = commq::ring_of_cliques(RingSpec{2, 3});
  EXPECT_EQ(tiny.graph.node_count(), 6u);
  EXPECT_EQ(tiny.graph.edges().size(), 8u);
}

TEST(RingOfCliques, RejectsInvalidSpec) {
  EXPECT_THROW(commq::ring_of_cliques(RingSpec{5, 5}), input_error);
  EXPECT_THROW(commq::ring_of_cliques(RingSpec{4, 2}), input_error);
}

TEST(TwoPairsCliques, CountsAndDefaultTopology) {
  const commq::TwoPairsCliques net = commq::two_pairs_cliques(5, 3);
  EXPECT_EQ(net.graph.node_count(), 16u);
  EXPECT_EQ(net.graph.edges().size(), 30u);  // 20 + 6 + 4
  EXPECT_EQ(net.four_communities.community_count(), 4u);
  EXPECT_EQ(net.merged_small_pair.community_count(), 3u);

  // each clique has exactly two incident bridges and the small cliques
  // are joined to each other
  std::vector<int> incident(4, 0);
  int small_small = 0;
  for (const commq::Edge& e : net.graph.edges()) {
    const commq::CommunityId cu = net.four_communities[e.src];
    const commq::CommunityId cv = net.four_communities[e.dst];
    if (cu == cv) continue;
    ++incident[cu];
    ++incident[cv];
    if (cu >= 2 && cv >= 2) ++small_small;
  }
  EXPECT_EQ(incident, (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(small_small, 1);
}

TEST(TwoPairsCliques, CustomBridgesValidated) {
  // node layout for m=5, p=3: cliques [0,5) [5,10) [10,13) [13,16)
  using Bridges = commq::BridgeList;
  const Bridges ok{{{0, 5}, {1, 10}, {11, 13}, {14, 6}}};
  EXPECT_NO_THROW(commq::two_pairs_cliques(5, 3, ok));
  // intra-clique pair
  const Bridges intra{{{0, 1}, {1, 10}, {11, 13}, {14, 6}}};
  EXPECT_THROW(commq::two_pairs_cliques(5, 3, intra), input_error);
  // duplicate bridge
  const Bridges dup{{{0, 10}, {10, 0}, {11, 13}, {14, 6}}};
  EXPECT_THROW(commq::two_pairs_cliques(5, 3, dup), input_error);
  // endpoint out of range
  const Bridges oob{{{0, 99}, {1, 10}, {11, 13}, {14, 6}}};
  EXPECT_THROW(commq::two_pairs_cliques(5, 3, oob), input_error);
  EXPECT_THROW(commq::two_pairs_cliques(3, 3, std::nullopt), input_error);
}

TEST(RandomGraph, DeterministicInSeed) {
  const Graph a = commq::random_graph(20, 0.3, true, false, 42);
  const Graph b = commq::random_graph(20, 0.3, true, false, 42);
  const Graph c = commq::random_graph(20, 0.3, true, false, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(RandomGraph, ProbabilityExtremes) {
  EXPECT_TRUE(commq::random_graph(10, 0.0, false, false, 7).edges().empty());
  EXPECT_EQ(commq::random_graph(10, 1.0, false, false, 7), commq::complete_graph(10));
  EXPECT_EQ(commq::random_graph(6, 1.0, false, true, 7).edges().size(), 30u);
  EXPECT_THROW(commq::random_graph(5, 1.5, false, false, 7), input_error);
}

TEST(RandomGraph, WeightsInHalfOpenInterval) {
  const Graph g = commq::random_graph(15, 0.5, true, true, 11);
  ASSERT_FALSE(g.edges().empty());
  for (const commq::Edge& e : g.edges()) {
    EXPECT_GT(e.weight, 0.0);
    EXPECT_LE(e.weight, 2.0);
  }
}

TEST(Generators, RepeatInvocationsAreIdentical) {
  EXPECT_EQ(commq::two_cliques(6, 9).graph, commq::two_cliques(6, 9).graph);
  EXPECT_EQ(commq::ring_of_cliques(RingSpec{8, 4}).graph,
            commq::ring_of_cliques(RingSpec{8, 4}).graph);
  EXPECT_EQ(commq::two_pairs_cliques(6, 4).graph, commq::two_pairs_cliques(6, 4).graph);
  EXPECT_EQ(commq::clique_pair_vs_tree_pair().tree_graph,
            commq::clique_pair_vs_tree_pair().tree_graph);
}
