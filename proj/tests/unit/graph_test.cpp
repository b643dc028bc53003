#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "fewpaths/errors.hpp"
#include "fewpaths/generators.hpp"
#include "fewpaths/graph.hpp"
#include "fewpaths/traversal.hpp"
#include "test_graphs.hpp"

using namespace fewpaths;
using fewpaths::testing::make_graph;

TEST(DirectedGraph, SetSemantics) {
  DirectedGraph g(3);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(0, 1));
  EXPECT_TRUE(g.add_edge(2, 2));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(2, 2));
  EXPECT_FALSE(g.has_edge(1, 0));
}

TEST(DirectedGraph, RejectsBadInput) {
  EXPECT_THROW(DirectedGraph(0), std::invalid_argument);
  DirectedGraph g(2);
  EXPECT_THROW(g.add_edge(0, 2), std::out_of_range);
  EXPECT_THROW(g.add_edge(5, 0), std::out_of_range);
}

TEST(DirectedGraph, SuccessorsAreSorted) {
  auto g = make_graph(4, {{0, 3}, {0, 1}, {0, 2}});
  auto succ = g.successors(0);
  EXPECT_EQ(std::vector<Node>(succ.begin(), succ.end()), (std::vector<Node>{1, 2, 3}));
  EXPECT_EQ(g.out_degree(0), 3u);
  auto edges = g.edges();
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}

TEST(EdgeList, RoundTrip) {
  auto g = gen_random_dag(12, 0.3, 99);
  g.add_edge(5, 5);
  std::stringstream buf;
  write_edge_list(buf, g);
  EXPECT_EQ(read_edge_list(buf), g);
}

TEST(EdgeList, CommentsAndBlankLines) {
  std::istringstream in("# a triangle\n\n3 2   # header\n0 1\n\n# middle\n1 2\n");
  auto g = read_edge_list(in);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(EdgeList, Malformed) {
  auto parse = [](const char *text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("0 0\n"), ParseError);
  EXPECT_THROW(parse("2 1\n0 2\n"), ParseError);
  EXPECT_THROW(parse("2 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse("2 2\n0 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse("2 1\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse("2 1\n0 x\n"), ParseError);
}

TEST(EdgeList, MissingFile) {
  EXPECT_THROW(load_edge_list("/nonexistent/dir/g.txt"), IOFailure);
  EXPECT_THROW(save_edge_list("/nonexistent/dir/g.txt", DirectedGraph(1)), IOFailure);
}

TEST(EdgeList, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "fewpaths_graph_test.txt";
  const auto g = gen_diamond_chain(3);
  save_edge_list(path, g);
  EXPECT_EQ(load_edge_list(path), g);
  std::filesystem::remove(path);
}

TEST(Traversal, TopologicalOrderIsCanonical) {
  auto g = make_graph(4, {{2, 0}, {3, 1}});
  auto order = topological_order(g);
  ASSERT_TRUE(order);
  EXPECT_EQ(*order, (std::vector<Node>{2, 0, 3, 1}));
}

TEST(Traversal, CyclesAreDetected) {
  EXPECT_FALSE(is_acyclic(make_graph(1, {{0, 0}})));
  EXPECT_FALSE(is_acyclic(make_graph(3, {{0, 1}, {1, 2}, {2, 0}})));
  EXPECT_TRUE(is_acyclic(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST(Traversal, CondensationOrdersComponents) {
  // 0 -> {1,2} cycle -> 3, plus a self-loop at 4
  auto g = make_graph(5, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {4, 4}});
  auto c = condense(g);
  EXPECT_EQ(c.component_count, 4u);
  EXPECT_EQ(c.component[1], c.component[2]);
  for (const auto &e : g.edges())
    EXPECT_LE(c.component[e.from], c.component[e.to]);
  EXPECT_TRUE(c.cyclic[c.component[1]]);
  EXPECT_TRUE(c.cyclic[c.component[4]]);
  EXPECT_FALSE(c.cyclic[c.component[0]]);
  EXPECT_FALSE(c.cyclic[c.component[3]]);
}

TEST(Traversal, Reachability) {
  auto g = make_graph(4, {{0, 1}, {1, 2}});
  auto r = reachable_from(g, 0);
  EXPECT_EQ(r, (std::vector<bool>{true, true, true, false}));
}
