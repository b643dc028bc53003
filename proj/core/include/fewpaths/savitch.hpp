#pragma once

#include <cstdint>

#include "fewpaths/graph.hpp"

namespace fewpaths {

struct SavitchResult {
  bool reachable = false;
  // Deepest nesting of the midpoint recursion below the top call; the space
  // proxy of the method. At most ceil(log2 n).
  std::size_t recursion_depth = 0;
  std::uint64_t calls = 0;
};

// Reachability by recursive midpoint doubling: reach(u, v, d) holds iff there
// is a walk of length <= 2^d, tried through every midpoint w. Starts at
// d = ceil(log2 n). Runs in time n^O(log n), so only for small graphs.
SavitchResult savitch_reachable(const DirectedGraph &g, Node s, Node t);

} // namespace fewpaths
