#include <cmath>

#include <gtest/gtest.h>

#include "fewpaths/generators.hpp"
#include "fewpaths/path_count.hpp"
#include "fewpaths/random_walk.hpp"
#include "fewpaths/traversal.hpp"
#include "test_graphs.hpp"

using namespace fewpaths;
using namespace fewpaths::testing;

namespace {
const BigInt kBig = BigInt(1) << 100;
}

TEST(ChainFigureOne, HalfTwo) {
  // 1->2, 1->3, 3->4 in 1-based labels
  EXPECT_EQ(gen_chain_figure1(2), make_graph_1based(4, {{1, 2}, {1, 3}, {3, 4}}));
  EXPECT_EQ(count_paths_oracle(gen_chain_figure1(2), kBig).at(0, 3), PathCount::finite(1));
}

TEST(ChainFigureOne, HalfOne) {
  EXPECT_EQ(gen_chain_figure1(1), make_graph(2, {{0, 1}}));
}

TEST(ChainFigureOne, AllCountsAtMostOne) {
  for (std::size_t half : {1, 3, 10}) {
    auto m = count_paths_oracle(gen_chain_figure1(half), kBig).max_finite();
    ASSERT_TRUE(m);
    EXPECT_EQ(*m, 1);
  }
}

TEST(DiamondChain, SourceSinkCount) {
  EXPECT_EQ(gen_diamond_chain(1).size(), 3u);
  EXPECT_EQ(count_paths_oracle(gen_diamond_chain(1), kBig).at(0, 2), PathCount::finite(2));
  EXPECT_EQ(gen_diamond_chain(5).size(), 11u);
  EXPECT_EQ(count_paths_oracle(gen_diamond_chain(5), kBig).at(0, 10), PathCount::finite(32));
  EXPECT_EQ(count_paths_oracle(gen_diamond_chain(5), kBig).max_finite(), BigInt(32));
}

TEST(RandomDag, Extremes) {
  EXPECT_EQ(gen_random_dag(6, 0.0, 1).edge_count(), 0u);
  for (std::size_t n = 2; n <= 20; ++n) {
    auto g = gen_random_dag(n, 1.0, 3);
    EXPECT_EQ(g, transitive_tournament(n));
    EXPECT_EQ(count_paths_oracle(g, kBig).at(0, n - 1), PathCount::finite(BigInt(1) << (n - 2)));
  }
}

TEST(RandomDag, DeterministicAndAcyclic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = gen_random_dag(30, 0.2, seed);
    EXPECT_EQ(a, gen_random_dag(30, 0.2, seed));
    EXPECT_TRUE(is_acyclic(a));
    for (const auto &e : a.edges())
      EXPECT_LT(e.from, e.to);
  }
  EXPECT_NE(gen_random_dag(30, 0.2, 1), gen_random_dag(30, 0.2, 2));
}

TEST(DisjointUnion, TwoEdges) {
  auto u = disjoint_union(make_graph(2, {{0, 1}}), make_graph(2, {{0, 1}}));
  EXPECT_EQ(u.size(), 4u);
  EXPECT_EQ(u.edge_count(), 2u);
  auto n = count_paths_oracle(u, kBig);
  for (Node i : {0, 1})
    for (Node j : {2, 3}) {
      EXPECT_EQ(n.at(i, j), PathCount::finite(0));
      EXPECT_EQ(n.at(j, i), PathCount::finite(0));
    }
}

TEST(DisjointUnion, ChainWithDiamonds) {
  auto u = disjoint_union(gen_chain_figure1(4), gen_diamond_chain(10));
  auto n = count_paths_oracle(u, kBig);
  EXPECT_EQ(n.at(0, 7), PathCount::finite(1));
  EXPECT_EQ(n.max_finite(), BigInt(1024));
}

TEST(DisjointUnion, EdgelessIsIdentity) {
  auto g = lange_example(LangeExample::Middle);
  auto u = disjoint_union(g, DirectedGraph(3));
  auto a = count_paths_oracle(g, kBig);
  auto b = count_paths_oracle(u, kBig);
  for (Node i = 0; i < g.size(); ++i)
    for (Node j = 0; j < g.size(); ++j)
      EXPECT_EQ(a.at(i, j), b.at(i, j));
}

TEST(RandomWalk, ChainFigureOneQuarterScale) {
  // reach the last node with probability 2^-(half-1) = 1/8
  auto est = random_walk_hit_probability(gen_chain_figure1(4), 0, 7, 100, 100000, 11);
  const double p = 0.125;
  const double se = std::sqrt(p * (1 - p) / 100000.0);
  EXPECT_NEAR(est.probability(), p, 3 * se);
}

TEST(RandomWalk, TrivialCases) {
  auto g = gen_chain_figure1(4);
  EXPECT_EQ(random_walk_hit_probability(g, 3, 3, 10, 100, 1).probability(), 1.0);
  EXPECT_EQ(random_walk_hit_probability(g, 2, 1, 10, 100, 1).probability(), 0.0);
}

TEST(RandomWalk, Deterministic) {
  auto g = gen_random_dag(20, 0.3, 2);
  auto a = random_walk_hit_probability(g, 0, 19, 30, 5000, 8);
  auto b = random_walk_hit_probability(g, 0, 19, 30, 5000, 8);
  EXPECT_EQ(a.hits, b.hits);
}

TEST(RandomWalk, StepLimit) {
  auto g = path_graph(5);
  EXPECT_EQ(random_walk_hit_probability(g, 0, 4, 3, 10, 1).hits, 0u);
  EXPECT_EQ(random_walk_hit_probability(g, 0, 4, 4, 10, 1).hits, 10u);
}
