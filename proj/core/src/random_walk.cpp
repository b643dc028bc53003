#include "fewpaths/random_walk.hpp"

#include <stdexcept>

#include "fewpaths/rng.hpp"

namespace fewpaths {

WalkEstimate random_walk_hit_probability(const DirectedGraph &g, Node s, Node t,
                                         std::uint64_t max_steps, std::uint64_t trials,
                                         std::uint64_t seed) {
  if (s >= g.size() || t >= g.size()) {
    throw std::out_of_range("random_walk_hit_probability: s or t out of range");
  }
  if (trials == 0) {
    throw std::invalid_argument("random_walk_hit_probability: trials must be >= 1");
  }
  WalkEstimate est;
  est.trials = trials;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng(stream_seed(seed, trial));
    Node at = s;
    for (std::uint64_t step = 0;; ++step) {
      if (at == t) {
        ++est.hits;
        break;
      }
      const auto succ = g.successors(at);
      if (step == max_steps || succ.empty()) {
        break;
      }
      at = succ[succ.size() == 1 ? 0 : rng.below(succ.size())];
    }
  }
  return est;
}

} // namespace fewpaths
