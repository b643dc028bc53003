#include "fewpaths/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace fewpaths {

std::string_view to_string(NoiseMode mode) noexcept {
  switch (mode) {
  case NoiseMode::Exact:
    return "exact";
  case NoiseMode::UniformPerturb:
    return "uniform";
  case NoiseMode::AdversarialWorstCase:
    return "adversarial";
  }
  return "exact";
}

std::optional<NoiseMode> parse_noise_mode(std::string_view text) noexcept {
  if (text == "exact") {
    return NoiseMode::Exact;
  }
  if (text == "uniform") {
    return NoiseMode::UniformPerturb;
  }
  if (text == "adversarial") {
    return NoiseMode::AdversarialWorstCase;
  }
  return std::nullopt;
}

void NoiseModel::validate() const {
  if (is_exact()) {
    return;
  }
  if (!(accuracy > 0.0) || !std::isfinite(accuracy)) {
    throw std::invalid_argument("NoiseModel: accuracy must be positive");
  }
  if (!(failure_prob >= 0.0 && failure_prob < 1.0)) {
    throw std::invalid_argument("NoiseModel: failure_prob must lie in [0, 1)");
  }
}

bool NoiseSource::draw_failure(double probability) {
  if (model_.is_exact()) {
    return false;
  }
  return rng_.bernoulli(probability);
}

double NoiseSource::perturbation(double x, int direction, bool failed) {
  if (model_.is_exact()) {
    return 0.0;
  }
  const double u = rng_.uniform01();
  if (failed) {
    const double garbage = 1.0 + std::abs(x);
    return garbage * (2.0 * u - 1.0);
  }
  switch (model_.mode) {
  case NoiseMode::UniformPerturb:
    return model_.accuracy * (2.0 * u - 1.0);
  case NoiseMode::AdversarialWorstCase:
    return direction >= 0 ? model_.accuracy : -model_.accuracy;
  case NoiseMode::Exact:
    break;
  }
  return 0.0;
}

} // namespace fewpaths
