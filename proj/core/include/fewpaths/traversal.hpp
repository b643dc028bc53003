#pragma once

#include <optional>
#include <vector>

#include "fewpaths/graph.hpp"

namespace fewpaths {

// Kahn's algorithm with a min-heap frontier, so the order is canonical.
// Empty optional when the graph has a cycle (including a self-loop).
std::optional<std::vector<Node>> topological_order(const DirectedGraph &g);

inline bool is_acyclic(const DirectedGraph &g) {
  return topological_order(g).has_value();
}

struct Condensation {
  // component[v] is the id of v's strongly connected component. Ids are in
  // topological order of the condensation: edges go from lower to higher id.
  std::vector<std::size_t> component;
  std::size_t component_count = 0;
  // A component is cyclic if it has more than one node or a self-loop.
  std::vector<bool> cyclic;
};

Condensation condense(const DirectedGraph &g);

// Nodes reachable from `source` (source itself included).
std::vector<bool> reachable_from(const DirectedGraph &g, Node source);

} // namespace fewpaths
