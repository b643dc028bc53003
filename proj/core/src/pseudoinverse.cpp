#include "fewpaths/pseudoinverse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fewpaths/errors.hpp"
#include "fewpaths/rng.hpp"

namespace fewpaths {

namespace {

// Stream ids keep the noise of different call sites apart.
constexpr std::uint64_t kSpectrumStream = 0x5350454354ULL;
constexpr std::uint64_t kEntryStream = 0x454e545259ULL;

void check_index(std::size_t i, std::size_t n, const char *what) {
  if (i >= n) {
    throw std::out_of_range(std::string(what) + " index out of range");
  }
}

} // namespace

double SpectrumEstimate::min() const {
  return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
}

SpectrumEstimate spectrum_estimate(const SvdDecomposition &d, const NoiseModel &noise) {
  noise.validate();
  NoiseSource source(noise, kSpectrumStream);
  SpectrumEstimate out;
  out.failed = source.draw_failure(noise.failure_prob);
  out.values.reserve(d.size());
  for (double s : d.sigma) {
    out.values.push_back(std::max(0.0, s + source.perturbation(s, -1, out.failed)));
  }
  return out;
}

SpectrumEstimate spectrum_estimate(const DenseMatrix &m, const NoiseModel &noise) {
  return spectrum_estimate(svd(m), noise);
}

std::size_t kept_rank(std::span<const double> sigma, double zeta) noexcept {
  return static_cast<std::size_t>(
      std::count_if(sigma.begin(), sigma.end(), [zeta](double s) { return s >= zeta; }));
}

DenseMatrix effective_pseudoinverse(const SvdDecomposition &d, double zeta) {
  if (!(zeta > 0.0)) {
    throw std::invalid_argument("effective_pseudoinverse: zeta must be positive");
  }
  for (double s : d.sigma) {
    if (std::abs(s - zeta) <= kThresholdCollision) {
      throw ThresholdOnSingularValue("effective_pseudoinverse: zeta coincides with a singular value");
    }
  }
  // Result is cols(M) x rows(M).
  DenseMatrix out(d.v.rows(), d.u.rows());
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d.sigma[k] < zeta) {
      continue;
    }
    const double inv = 1.0 / d.sigma[k];
    for (std::size_t i = 0; i < d.v.rows(); ++i) {
      const double vi = d.v(i, k) * inv;
      for (std::size_t j = 0; j < d.u.rows(); ++j) {
        out(i, j) += vi * d.u(j, k);
      }
    }
  }
  return out;
}

DenseMatrix effective_pseudoinverse(const DenseMatrix &m, double zeta) {
  return effective_pseudoinverse(svd(m), zeta);
}

double draw_threshold(std::span<const double> sigma, double zeta, double delta, std::uint64_t seed) {
  if (!(zeta > 0.0)) {
    throw std::invalid_argument("draw_threshold: zeta must be positive");
  }
  if (!(delta >= 0.0)) {
    throw std::invalid_argument("draw_threshold: delta must be non-negative");
  }
  const double lo = std::max(zeta - delta, 0.0);
  const double hi = zeta + delta;
  Rng rng(seed);
  constexpr int kMaxDraws = 64;
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    const double candidate = delta == 0.0 ? zeta : rng.uniform(lo, hi);
    const bool collides = std::any_of(sigma.begin(), sigma.end(), [&](double s) {
      return std::abs(std::abs(s) - candidate) <= kThresholdCollision;
    });
    if (candidate > 0.0 && !collides) {
      return candidate;
    }
    if (delta == 0.0) {
      break;
    }
  }
  throw ThresholdUnresolvable("draw_threshold: every draw landed on a singular value");
}

double default_scale(const DenseMatrix &m) {
  return static_cast<double>(m.rows()) * m.max_abs();
}

PseudoinverseSimulator::PseudoinverseSimulator(const DenseMatrix &m, double z)
    : svd_(svd(m)), z_(z) {
  if (!m.is_square()) {
    throw std::invalid_argument("PseudoinverseSimulator: matrix must be square");
  }
  if (!(z > 0.0)) {
    throw std::invalid_argument("PseudoinverseSimulator: Z must be positive");
  }
  if (svd_.sigma_max() > z * (1.0 + 1e-12)) {
    throw SpectralBoundViolated("sigma_1 = " + std::to_string(svd_.sigma_max()) +
                                " exceeds Z = " + std::to_string(z));
  }
}

std::vector<double> PseudoinverseSimulator::embedded_spectrum() const {
  std::vector<double> out;
  out.reserve(2 * size());
  for (double s : svd_.sigma) {
    out.push_back(s / z_);
  }
  for (double s : svd_.sigma) {
    out.push_back(-s / z_);
  }
  return out;
}

double PseudoinverseSimulator::embedded_entry(std::size_t row, std::size_t col,
                                              double threshold) const {
  const std::size_t n = size();
  check_index(row, 2 * n, "embedded row");
  check_index(col, 2 * n, "embedded col");
  // Component i of the eigenvector for sign +-1 and index j, times sqrt(2).
  auto component = [&](std::size_t i, std::size_t j, double sign) {
    return i < n ? svd_.v(i, j) : sign * svd_.u(i - n, j);
  };
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double lambda = svd_.sigma[j] / z_;
    if (lambda < threshold || lambda == 0.0) {
      continue;
    }
    for (double sign : {1.0, -1.0}) {
      acc += 0.5 * component(row, j, sign) * component(col, j, sign) / (sign * lambda);
    }
  }
  return acc;
}

double PseudoinverseSimulator::pseudoinverse_entry(std::size_t s, std::size_t t,
                                                   double zeta_realized) const {
  check_index(s, size(), "row");
  check_index(t, size(), "column");
  return embedded_entry(s, t + size(), zeta_realized / z_) / z_;
}

double PseudoinverseSimulator::inverse_entry(std::size_t s, std::size_t t) const {
  check_index(s, size(), "row");
  check_index(t, size(), "column");
  if (svd_.sigma_min() <= 0.0) {
    throw std::domain_error("inverse_entry: matrix is singular");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < size(); ++j) {
    acc += svd_.v(s, j) * svd_.u(t, j) / svd_.sigma[j];
  }
  return acc;
}

PseudoinverseEstimate PseudoinverseSimulator::estimate_entry(std::size_t s, std::size_t t,
                                                             double zeta, double delta,
                                                             const NoiseModel &noise,
                                                             std::uint64_t seed) const {
  check_index(s, size(), "row");
  check_index(t, size(), "column");
  noise.validate();
  const auto spectrum = embedded_spectrum();
  const double threshold = draw_threshold(spectrum, zeta / z_, delta / z_, seed);

  PseudoinverseEstimate est;
  est.zeta_requested = zeta;
  est.delta = delta;
  est.scale = z_;
  est.zeta_realized = threshold * z_;
  est.kept_rank = 0;
  for (double s_j : svd_.sigma) {
    if (s_j / z_ >= threshold) {
      ++est.kept_rank;
    }
  }
  est.noiseless_value = embedded_entry(s, t + size(), threshold) / z_;

  NoiseSource source(noise, stream_seed(kEntryStream, (std::uint64_t{s} << 32) ^ t));
  est.failed = source.draw_failure(noise.failure_prob);
  est.value = est.noiseless_value +
              source.perturbation(est.noiseless_value,
                                  away_from_nearest_integer(est.noiseless_value), est.failed);
  return est;
}

PseudoinverseEstimate estimate_pseudoinverse_entry(const DenseMatrix &m, std::size_t s,
                                                   std::size_t t, double zeta, double delta,
                                                   const NoiseModel &noise, double z,
                                                   std::uint64_t seed) {
  return PseudoinverseSimulator(m, z).estimate_entry(s, t, zeta, delta, noise, seed);
}

double well_outcome_probability(const DenseMatrix &m, std::size_t t, double zeta,
                                double zeta_realized) {
  if (!m.is_square()) {
    throw std::invalid_argument("well_outcome_probability: matrix must be square");
  }
  check_index(t, m.rows(), "column");
  const auto d = svd(m);
  // |M^+ e_t|^2 = sum over kept j of sigma_j^-2 <u_j|t>^2, the v_j being orthonormal.
  double norm2 = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d.sigma[j] >= zeta_realized && d.sigma[j] > 0.0) {
      const double beta = d.u(t, j);
      norm2 += beta * beta / (d.sigma[j] * d.sigma[j]);
    }
  }
  return zeta * zeta * norm2;
}

} // namespace fewpaths
