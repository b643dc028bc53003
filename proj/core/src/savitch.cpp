#include "fewpaths/savitch.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewpaths {

namespace {

struct Search {
  const DirectedGraph &g;
  SavitchResult result;

  bool reach(Node u, Node v, std::size_t budget_log2, std::size_t level) {
    ++result.calls;
    result.recursion_depth = std::max(result.recursion_depth, level);
    if (u == v) {
      return true;
    }
    if (budget_log2 == 0) {
      return g.has_edge(u, v);
    }
    for (Node w = 0; w < g.size(); ++w) {
      if (reach(u, w, budget_log2 - 1, level + 1) && reach(w, v, budget_log2 - 1, level + 1)) {
        return true;
      }
    }
    return false;
  }
};

std::size_t ceil_log2(std::size_t n) {
  std::size_t d = 0;
  while ((std::size_t{1} << d) < n) {
    ++d;
  }
  return d;
}

} // namespace

SavitchResult savitch_reachable(const DirectedGraph &g, Node s, Node t) {
  if (s >= g.size() || t >= g.size()) {
    throw std::out_of_range("savitch_reachable: s or t out of range");
  }
  Search search{g, {}};
  search.result.reachable = search.reach(s, t, ceil_log2(g.size()), 0);
  return search.result;
}

} // namespace fewpaths
