#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

#include "fewpaths/rng.hpp"

namespace fewpaths {

enum class NoiseMode { Exact, UniformPerturb, AdversarialWorstCase };

std::string_view to_string(NoiseMode mode) noexcept;
std::optional<NoiseMode> parse_noise_mode(std::string_view text) noexcept;

// Stand-in for the inaccuracy of the quantum subroutines: every simulated
// output is perturbed additively by at most `accuracy`, and with probability
// `failure_prob` the whole output is flagged as failed and replaced by
// garbage. Exact mode ignores both knobs.
struct NoiseModel {
  NoiseMode mode = NoiseMode::Exact;
  double accuracy = 0.0;
  double failure_prob = 0.0;
  std::uint64_t seed = 0;

  static NoiseModel exact() { return {}; }
  static NoiseModel uniform(double accuracy, double failure_prob, std::uint64_t seed) {
    return {NoiseMode::UniformPerturb, accuracy, failure_prob, seed};
  }
  static NoiseModel adversarial(double accuracy, double failure_prob, std::uint64_t seed) {
    return {NoiseMode::AdversarialWorstCase, accuracy, failure_prob, seed};
  }

  bool is_exact() const noexcept { return mode == NoiseMode::Exact; }

  // Same mode and seed, different knobs.
  NoiseModel with(double new_accuracy, double new_failure_prob) const {
    return {mode, new_accuracy, new_failure_prob, seed};
  }

  // Throws std::invalid_argument unless accuracy > 0 and failure_prob is in
  // [0, 1) (only checked outside Exact mode).
  void validate() const;
};

// Deterministic stream of perturbations for one simulated call.
//
// Every draw consumes the same number of random words regardless of mode, so
// switching modes does not shift later draws. Uniform mode draws eta from
// [-accuracy, accuracy]; adversarial mode uses eta = direction * accuracy
// with the direction picked by the caller to do the most damage. A failed
// output gets eta uniform on [-(1 + |x|), 1 + |x|].
class NoiseSource {
public:
  NoiseSource(const NoiseModel &model, std::uint64_t stream)
      : model_(model), rng_(stream_seed(model.seed, stream)) {}

  // Bernoulli(probability); always false in Exact mode.
  bool draw_failure(double probability);

  // Perturbation for the value x; `direction` (+1 or -1) is only used in
  // adversarial mode.
  double perturbation(double x, int direction, bool failed);

  const NoiseModel &model() const noexcept { return model_; }

private:
  NoiseModel model_;
  Rng rng_;
};

// Direction that pushes x toward the nearest rounding boundary.
inline int away_from_nearest_integer(double x) noexcept {
  return x - std::round(x) >= 0.0 ? 1 : -1;
}

} // namespace fewpaths
