#pragma once

#include <cstdint>

#include "fewpaths/graph.hpp"

namespace fewpaths {

struct WalkEstimate {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;

  double probability() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials);
  }
};

// Monte Carlo estimate of the probability that a uniform random walk from s
// visits t within max_steps steps. Each step picks a successor uniformly; a
// walker on a node without successors is absorbed. Trial i draws from stream
// i of `seed`, so results do not depend on evaluation order.
WalkEstimate random_walk_hit_probability(const DirectedGraph &g, Node s, Node t,
                                         std::uint64_t max_steps, std::uint64_t trials,
                                         std::uint64_t seed);

} // namespace fewpaths
