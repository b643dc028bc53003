#pragma once

#include <initializer_list>
#include <utility>

#include "fewpaths/graph.hpp"

namespace fewpaths::testing {

inline DirectedGraph make_graph(std::size_t n, std::initializer_list<std::pair<Node, Node>> edges) {
  DirectedGraph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

// Edges given with 1-based labels, as they are usually drawn.
inline DirectedGraph make_graph_1based(std::size_t n,
                                       std::initializer_list<std::pair<Node, Node>> edges) {
  DirectedGraph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u - 1, v - 1);
  return g;
}

inline DirectedGraph transitive_tournament(std::size_t n) {
  DirectedGraph g(n);
  for (Node i = 0; i < n; ++i)
    for (Node j = i + 1; j < n; ++j)
      g.add_edge(i, j);
  return g;
}

inline DirectedGraph path_graph(std::size_t n) {
  DirectedGraph g(n);
  for (Node i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

// Graph number `code` among all digraphs on n nodes (self-loops included):
// bit i*n+j of code is the edge i -> j.
inline DirectedGraph graph_from_code(std::size_t n, std::uint64_t code) {
  DirectedGraph g(n);
  for (Node i = 0; i < n; ++i)
    for (Node j = 0; j < n; ++j)
      if (code >> (i * n + j) & 1)
        g.add_edge(i, j);
  return g;
}

} // namespace fewpaths::testing
