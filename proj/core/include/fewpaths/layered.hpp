#pragma once

#include "fewpaths/graph.hpp"

namespace fewpaths {

// Node (i, l) of the layered graph, l in 0..n, flattened as i + l*n.
constexpr Node layered_node(Node i, std::size_t layer, std::size_t n) noexcept {
  return i + layer * n;
}

// Acyclic layered copy of g on n*(n+1) nodes:
//   (i,l) -> (j,l+1) for every edge (i,j) of g and l <= n-2,
//   (i,l) -> (i,n)   for every node i and l <= n-1.
// Walks (i,0) ~> (j,n) correspond one-to-one to walks i ~> j of length <= n-1.
DirectedGraph layer_graph(const DirectedGraph &g);

} // namespace fewpaths
