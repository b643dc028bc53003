#include "fewpaths/layered.hpp"

namespace fewpaths {

DirectedGraph layer_graph(const DirectedGraph &g) {
  const std::size_t n = g.size();
  DirectedGraph out(n * (n + 1));
  for (const auto &e : g.edges()) {
    for (std::size_t l = 0; l + 2 <= n; ++l) {
      out.add_edge(layered_node(e.from, l, n), layered_node(e.to, l + 1, n));
    }
  }
  for (Node i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      out.add_edge(layered_node(i, l, n), layered_node(i, n, n));
    }
  }
  return out;
}

} // namespace fewpaths
