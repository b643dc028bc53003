#include "fewpaths/counting.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fewpaths/errors.hpp"
#include "fewpaths/layered.hpp"
#include "fewpaths/rng.hpp"
#include "fewpaths/spectral.hpp"
#include "fewpaths/traversal.hpp"

namespace fewpaths {

namespace {

constexpr double kMinMargin = 0.05;
constexpr std::uint64_t kThresholdStream = 0x5448524553ULL;

std::uint64_t threshold_seed(std::uint64_t seed, Node s, Node t) {
  return stream_seed(seed ^ kThresholdStream, (std::uint64_t{s} << 32) ^ t);
}

void check_pair(Node s, Node t, std::size_t n) {
  if (s >= n || t >= n) {
    throw std::out_of_range("count: s or t out of range");
  }
}

void check_bound(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("count: path bound P must be >= 1");
  }
}

DirectedGraph maybe_layered(const DirectedGraph &g, bool &layered) {
  layered = !is_acyclic(g);
  return layered ? layer_graph(g) : g;
}

} // namespace

CountResult round_count(double raw_value, double tolerance, CountParameters parameters,
                        bool failed) {
  const double nearest = std::round(raw_value);
  const double distance = std::abs(raw_value - nearest);
  CountResult result;
  result.raw_value = raw_value;
  result.margin = 0.5 - distance;
  result.failed = failed;
  result.parameters = parameters;
  if (raw_value < -tolerance || distance > tolerance || result.margin < kMinMargin) {
    std::ostringstream msg;
    msg << "raw estimate " << raw_value << " is not within " << tolerance
        << " of a non-negative integer";
    throw PromiseViolationSuspected(msg.str());
  }
  result.count = nearest <= 0.0 ? 0 : static_cast<std::uint64_t>(nearest);
  return result;
}

StronglyFewCounter::StronglyFewCounter(const DirectedGraph &g, std::uint64_t bound)
    : n_(g.size()), bound_(bound),
      simulator_(counting_laplacian(g), static_cast<double>(g.size())) {
  check_bound(bound);
}

CountResult StronglyFewCounter::count(Node s, Node t, const NoiseModel &noise) const {
  check_pair(s, t, n_);
  const double n = static_cast<double>(n_);
  const double p = static_cast<double>(bound_);
  CountParameters params;
  params.bound = bound_;
  params.zeta = 1.0 / (2.0 * n * p);
  params.delta = 1.0 / (4.0 * n * p);
  params.accuracy = noise.accuracy;
  params.failure_prob = noise.failure_prob;
  params.scale = simulator_.scale();
  params.seed = noise.seed;
  params.matrix_size = n_;
  params.mode = noise.mode;

  const auto est = simulator_.estimate_entry(s, t, params.zeta, params.delta, noise,
                                             threshold_seed(noise.seed, s, t));
  params.zeta_realized = est.zeta_realized;
  return round_count(est.value, 1.0 / 3.0, params, est.failed);
}

CountResult count_paths_strongly_few(const DirectedGraph &g, Node s, Node t, std::uint64_t bound,
                                     const NoiseModel &noise) {
  return StronglyFewCounter(g, bound).count(s, t, noise);
}

FewEndpointsCounter::FewEndpointsCounter(const DirectedGraph &g, std::uint64_t bound)
    : n_(g.size()), bound_(bound), layered_(false), simulator_([&] {
        const auto h = maybe_layered(g, layered_);
        return PseudoinverseSimulator(counting_laplacian(h), static_cast<double>(h.size()));
      }()) {
  check_bound(bound);
}

double FewEndpointsCounter::zeta() const noexcept {
  const double n = static_cast<double>(simulator_.size());
  const double p = static_cast<double>(bound_);
  return 1.0 / (10.0 * n * n * p * p);
}

CountResult FewEndpointsCounter::count(Node s, Node t, const NoiseModel &noise) const {
  check_pair(s, t, n_);
  const Node row = s;
  const Node col = layered_ ? layered_node(t, n_, n_) : t;
  const NoiseModel entry_noise = noise.is_exact() ? noise : noise.with(0.2, 0.2);

  CountParameters params;
  params.bound = bound_;
  params.zeta = zeta();
  params.delta = params.zeta;
  params.accuracy = entry_noise.is_exact() ? 0.0 : entry_noise.accuracy;
  params.failure_prob = entry_noise.is_exact() ? 0.0 : entry_noise.failure_prob;
  params.scale = simulator_.scale();
  params.seed = noise.seed;
  params.matrix_size = simulator_.size();
  params.layered = layered_;
  params.mode = noise.mode;

  const auto est = simulator_.estimate_entry(row, col, params.zeta, params.delta, entry_noise,
                                             threshold_seed(noise.seed, s, t));
  params.zeta_realized = est.zeta_realized;
  return round_count(est.value, 0.4, params, est.failed);
}

CountResult count_paths_few_endpoints(const DirectedGraph &g, Node s, Node t, std::uint64_t bound,
                                      const NoiseModel &noise) {
  return FewEndpointsCounter(g, bound).count(s, t, noise);
}

} // namespace fewpaths
