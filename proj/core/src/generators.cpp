#include "fewpaths/generators.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "fewpaths/rng.hpp"

namespace fewpaths {

DirectedGraph gen_chain_figure1(std::size_t half) {
  if (half == 0) {
    throw std::invalid_argument("gen_chain_figure1: half must be >= 1");
  }
  DirectedGraph g(2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    const Node spine = 2 * i;
    g.add_edge(spine, spine + 1);
    if (i + 1 < half) {
      g.add_edge(spine, spine + 2);
    }
  }
  return g;
}

DirectedGraph gen_diamond_chain(std::size_t m) {
  if (m == 0) {
    throw std::invalid_argument("gen_diamond_chain: m must be >= 1");
  }
  DirectedGraph g(2 * m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Node hub = 2 * i;
    g.add_edge(hub, hub + 1);
    g.add_edge(hub, hub + 2);
    g.add_edge(hub + 1, hub + 2);
  }
  return g;
}

DirectedGraph gen_random_dag(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("gen_random_dag: n must be >= 1");
  }
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("gen_random_dag: density must lie in [0, 1]");
  }
  Rng rng(seed);
  DirectedGraph g(n);
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) {
      if (rng.uniform01() < density) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

DirectedGraph disjoint_union(const DirectedGraph &g1, const DirectedGraph &g2) {
  const std::size_t shift = g1.size();
  DirectedGraph g(g1.size() + g2.size());
  for (const auto &e : g1.edges()) {
    g.add_edge(e.from, e.to);
  }
  for (const auto &e : g2.edges()) {
    g.add_edge(e.from + shift, e.to + shift);
  }
  return g;
}

namespace {

DirectedGraph from_one_based(std::size_t n, std::initializer_list<Edge> edges) {
  DirectedGraph g(n);
  for (const auto &e : edges) {
    g.add_edge(e.from - 1, e.to - 1);
  }
  return g;
}

} // namespace

DirectedGraph lange_example(LangeExample which) {
  switch (which) {
  case LangeExample::Left:
    return from_one_based(6, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}});
  case LangeExample::Middle:
    return from_one_based(7, {{1, 3}, {1, 4}, {2, 4}, {2, 7}, {3, 5}, {3, 6}, {4, 7}});
  case LangeExample::Right:
    return from_one_based(8, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {5, 7}, {5, 8}});
  }
  throw std::invalid_argument("lange_example: unknown example");
}

} // namespace fewpaths
