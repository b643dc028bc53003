#include "fewpaths/unambiguity.hpp"

#include <stdexcept>

#include "fewpaths/path_count.hpp"

namespace fewpaths {

UnambiguityReport classify(const DirectedGraph &g, Node s, Node t, std::uint64_t k) {
  if (s >= g.size() || t >= g.size()) {
    throw std::out_of_range("classify: s or t out of range");
  }
  if (k == 0) {
    throw std::invalid_argument("classify: k must be positive");
  }
  const BigInt bound = k;
  const auto counts = count_paths_oracle(g, bound + 1);

  UnambiguityReport report;
  report.k = k;
  report.s = s;
  report.t = t;

  if (counts.at(s, t).exceeds(bound)) {
    report.unambiguous_st = false;
    report.st_witness = std::pair{s, t};
  }
  for (Node j = 0; j < g.size() && report.reach_unambiguous_s; ++j) {
    if (counts.at(s, j).exceeds(bound)) {
      report.reach_unambiguous_s = false;
      report.reach_witness = j;
    }
  }
  for (Node i = 0; i < g.size() && report.strongly_unambiguous; ++i) {
    for (Node j = 0; j < g.size(); ++j) {
      if (counts.at(i, j).exceeds(bound)) {
        report.strongly_unambiguous = false;
        report.strong_witness = std::pair{i, j};
        break;
      }
    }
  }
  return report;
}

} // namespace fewpaths
