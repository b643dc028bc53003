#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "fewpaths/graph.hpp"

namespace fewpaths {

struct UnambiguityReport {
  std::uint64_t k = 1;
  Node s = 0;
  Node t = 0;

  // N(s,t) <= k
  bool unambiguous_st = true;
  std::optional<std::pair<Node, Node>> st_witness;

  // N(s,j) <= k for all j; witness is the first offending j.
  bool reach_unambiguous_s = true;
  std::optional<Node> reach_witness;

  // N(i,j) <= k for all i, j; witness is the first offending pair.
  bool strongly_unambiguous = true;
  std::optional<std::pair<Node, Node>> strong_witness;
};

// Evaluates the three unambiguity predicates with the exact oracle (cap k+1).
// Infinite counts falsify a predicate like any other count above k.
UnambiguityReport classify(const DirectedGraph &g, Node s, Node t, std::uint64_t k);

} // namespace fewpaths
