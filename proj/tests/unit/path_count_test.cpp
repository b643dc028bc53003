#include <gtest/gtest.h>

#include "fewpaths/generators.hpp"
#include "fewpaths/layered.hpp"
#include "fewpaths/path_count.hpp"
#include "fewpaths/unambiguity.hpp"
#include "test_graphs.hpp"

using namespace fewpaths;
using namespace fewpaths::testing;

namespace {
const BigInt kBig = BigInt(1) << 100;
}

TEST(PathCount, Kinds) {
  EXPECT_EQ(PathCount::finite(17).to_string(), "17");
  EXPECT_EQ(PathCount::infinite().to_string(), "inf");
  EXPECT_EQ(PathCount::overflow(10).to_string(), ">10");
  EXPECT_THROW(PathCount::finite(-1), std::invalid_argument);
  EXPECT_THROW((void)PathCount::infinite().value(), std::logic_error);
  EXPECT_TRUE(PathCount::infinite().exceeds(1000));
  EXPECT_TRUE(PathCount::overflow(10).exceeds(10));
  EXPECT_THROW((void)PathCount::overflow(10).exceeds(20), std::logic_error);
  EXPECT_FALSE(PathCount::finite(3).exceeds(3));
}

TEST(Oracle, LangeLeftGraph) {
  auto g = lange_example(LangeExample::Left);
  auto n = count_paths_oracle(g, kBig);
  EXPECT_EQ(n.at(0, 5), PathCount::finite(1)); // N(1,6)
  EXPECT_EQ(n.at(0, 4), PathCount::finite(2)); // N(1,5)
}

TEST(Oracle, EdgelessGraph) {
  auto n = count_paths_oracle(DirectedGraph(3), kBig);
  for (Node i = 0; i < 3; ++i)
    for (Node j = 0; j < 3; ++j)
      EXPECT_EQ(n.at(i, j), PathCount::finite(i == j ? 1 : 0));
}

TEST(Oracle, TransitiveTournament) {
  auto n = count_paths_oracle(transitive_tournament(4), kBig);
  EXPECT_EQ(n.at(0, 3), PathCount::finite(4));
  EXPECT_EQ(n.max_finite(), BigInt(4));
}

TEST(Oracle, SelfLoop) {
  auto n = count_paths_oracle(make_graph(1, {{0, 0}}), kBig);
  EXPECT_TRUE(n.at(0, 0).is_infinite());
  EXPECT_FALSE(n.all_finite());
  EXPECT_FALSE(n.max_finite());
}

TEST(Oracle, CyclesOnlyPoisonPairsRoutedThroughThem) {
  // 0 -> 1 <-> 2 -> 3, and 0 -> 4
  auto g = make_graph(5, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {0, 4}});
  auto n = count_paths_oracle(g, kBig);
  EXPECT_TRUE(n.at(0, 1).is_infinite());
  EXPECT_TRUE(n.at(0, 3).is_infinite());
  EXPECT_TRUE(n.at(2, 2).is_infinite());
  EXPECT_EQ(n.at(0, 4), PathCount::finite(1));
  EXPECT_EQ(n.at(3, 3), PathCount::finite(1));
  EXPECT_EQ(n.at(3, 1), PathCount::finite(0));
}

TEST(Oracle, OverflowAtCap) {
  auto n = count_paths_oracle(gen_diamond_chain(20), 1'000'000);
  EXPECT_TRUE(n.at(0, 40).is_overflow());
  EXPECT_EQ(n.at(0, 40).cap(), 1'000'000);
  EXPECT_EQ(count_paths_oracle(gen_diamond_chain(20), kBig).at(0, 40),
            PathCount::finite(BigInt(1) << 20));
}

TEST(Oracle, RejectsZeroCap) {
  EXPECT_THROW(count_paths_oracle(DirectedGraph(2), 0), std::invalid_argument);
}

TEST(Oracle, SingleSourceMatchesAllPairs) {
  auto g = gen_random_dag(15, 0.3, 5);
  g.add_edge(9, 7);
  g.add_edge(7, 9);
  auto all = count_paths_oracle(g, 50);
  for (Node s = 0; s < g.size(); ++s) {
    auto row = count_paths_from(g, s, 50);
    for (Node t = 0; t < g.size(); ++t)
      EXPECT_EQ(row[t], all.at(s, t));
  }
}

TEST(Layered, SingleEdge) {
  auto lay = layer_graph(make_graph(2, {{0, 1}}));
  EXPECT_EQ(lay.size(), 6u);
  auto n = count_paths_oracle(lay, kBig);
  EXPECT_EQ(n.at(layered_node(0, 0, 2), layered_node(1, 2, 2)), PathCount::finite(1));
  EXPECT_EQ(n.at(layered_node(0, 0, 2), layered_node(0, 2, 2)), PathCount::finite(1));
}

TEST(Layered, SelfLoopSingleNode) {
  auto lay = layer_graph(make_graph(1, {{0, 0}}));
  EXPECT_EQ(lay.size(), 2u);
  EXPECT_EQ(lay.edge_count(), 1u);
  EXPECT_TRUE(lay.has_edge(0, 1));
  EXPECT_EQ(count_paths_oracle(lay, kBig).at(0, 1), PathCount::finite(1));
}

// Only walks of length <= n-1 survive layering, so the 2-cycle on two nodes
// does not show up on the diagonal; its prefix 0 -> 1 does.
TEST(Layered, TwoCycleHasLengthN) {
  auto lay = layer_graph(make_graph(2, {{0, 1}, {1, 0}}));
  const auto counts = count_paths_oracle(lay, kBig);
  EXPECT_EQ(counts.at(layered_node(0, 0, 2), layered_node(0, 2, 2)), PathCount::finite(1));
  EXPECT_EQ(counts.at(layered_node(0, 0, 2), layered_node(1, 2, 2)), PathCount::finite(1));
}

TEST(Layered, TriangleOnFourNodesIsOnDiagonal) {
  auto lay = layer_graph(make_graph(4, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(count_paths_oracle(lay, kBig).at(layered_node(0, 0, 4), layered_node(0, 4, 4)),
            PathCount::finite(2));
}

TEST(Layered, EdgeCounts) {
  // n*(n-1)*|E| type-1 edges and n*n jump edges
  auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}});
  auto lay = layer_graph(g);
  EXPECT_EQ(lay.size(), 12u);
  EXPECT_EQ(lay.edge_count(), 2u * 4u + 9u);
}

TEST(Classify, LangeLeft) {
  auto r = classify(lange_example(LangeExample::Left), 0, 5, 1);
  EXPECT_TRUE(r.unambiguous_st);
  EXPECT_FALSE(r.reach_unambiguous_s);
  EXPECT_EQ(r.reach_witness, Node{4}); // node 5 in 1-based labels
  EXPECT_FALSE(r.strongly_unambiguous);
  EXPECT_TRUE(r.strong_witness);
}

TEST(Classify, LangeMiddle) {
  auto r = classify(lange_example(LangeExample::Middle), 0, 6, 1);
  EXPECT_TRUE(r.unambiguous_st);
  EXPECT_TRUE(r.reach_unambiguous_s);
  EXPECT_FALSE(r.strongly_unambiguous);
  // 2 -> 7 directly and via 4
  EXPECT_EQ(r.strong_witness, (std::pair<Node, Node>{1, 6}));
}

TEST(Classify, LangeRightIsStronglyUnambiguous) {
  auto g = lange_example(LangeExample::Right);
  for (Node s = 0; s < g.size(); ++s)
    for (Node t = 0; t < g.size(); ++t) {
      auto r = classify(g, s, t, 1);
      EXPECT_TRUE(r.strongly_unambiguous && r.reach_unambiguous_s && r.unambiguous_st);
    }
}

TEST(Classify, Edgeless) {
  auto r = classify(DirectedGraph(3), 0, 2, 1);
  EXPECT_TRUE(r.unambiguous_st);
  EXPECT_TRUE(r.reach_unambiguous_s);
  EXPECT_TRUE(r.strongly_unambiguous);
  EXPECT_FALSE(r.st_witness);
}

TEST(Classify, InfiniteCountsAreViolations) {
  auto r = classify(make_graph(3, {{0, 1}, {1, 1}, {1, 2}}), 0, 2, 1000);
  EXPECT_FALSE(r.unambiguous_st);
  EXPECT_EQ(r.st_witness, (std::pair<Node, Node>{0, 2}));
  EXPECT_FALSE(r.reach_unambiguous_s);
  EXPECT_EQ(r.reach_witness, Node{1});
}

TEST(Classify, ChainFigureOne) {
  auto r = classify(gen_chain_figure1(10), 0, 19, 1);
  EXPECT_TRUE(r.strongly_unambiguous);
}
