#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fewpaths/dense_matrix.hpp"
#include "fewpaths/noise.hpp"
#include "fewpaths/svd.hpp"

namespace fewpaths {

// A threshold closer than this to a singular value is considered to sit on it.
inline constexpr double kThresholdCollision = 1e-12;

struct SpectrumEstimate {
  std::vector<double> values; // same order as the true singular values
  bool failed = false;

  double min() const;
};

// True singular values, each perturbed per `noise` (adversarial mode pushes
// them down) and clamped at zero.
SpectrumEstimate spectrum_estimate(const DenseMatrix &m, const NoiseModel &noise);
SpectrumEstimate spectrum_estimate(const SvdDecomposition &d, const NoiseModel &noise);

// sum over sigma_j >= zeta of sigma_j^-1 v_j u_j^T. Throws
// ThresholdOnSingularValue when some sigma_j is within 1e-12 of zeta.
DenseMatrix effective_pseudoinverse(const DenseMatrix &m, double zeta);
DenseMatrix effective_pseudoinverse(const SvdDecomposition &d, double zeta);

// Number of singular values >= zeta.
std::size_t kept_rank(std::span<const double> sigma, double zeta) noexcept;

// Realized threshold: uniform on [zeta - delta, zeta + delta] (lower end
// clamped at zero), redrawn until it is positive and no |sigma_j| lies
// within 1e-12 of it. delta == 0 returns zeta itself when that is legal.
// Throws ThresholdUnresolvable after 64 rejected draws.
double draw_threshold(std::span<const double> sigma, double zeta, double delta, std::uint64_t seed);

struct PseudoinverseEstimate {
  double value = 0.0;          // noisy estimate of M^+_{zeta_realized}(s, t)
  double noiseless_value = 0.0; // the simulated entry before output noise
  double zeta_realized = 0.0;
  double zeta_requested = 0.0;
  double delta = 0.0;
  double scale = 1.0; // Z
  std::size_t kept_rank = 0;
  bool failed = false;
};

// Matrix-level simulation of effective pseudoinversion. Holds the SVD of M
// and answers entry queries through the symmetric embedding of M / Z, whose
// eigenpairs are (+-sigma_j / Z, (v_j, +-u_j) / sqrt(2)).
class PseudoinverseSimulator {
public:
  // Throws SpectralBoundViolated when sigma_1(m) > Z.
  PseudoinverseSimulator(const DenseMatrix &m, double z);

  std::size_t size() const noexcept { return svd_.size(); }
  double scale() const noexcept { return z_; }
  const SvdDecomposition &decomposition() const noexcept { return svd_; }

  // Eigenvalues of the embedding of M / Z: +sigma_j / Z for all j, then
  // -sigma_j / Z for all j.
  std::vector<double> embedded_spectrum() const;

  // Entry (row, col) of the pseudoinverse of the embedding of M / Z,
  // truncated to eigenvalues with |lambda| >= threshold (rescaled units).
  double embedded_entry(std::size_t row, std::size_t col, double threshold) const;

  // M^+_{zeta_realized}(s, t) in the units of M, computed as
  // H^+(s, t + n) / Z with the threshold rescaled by 1 / Z.
  double pseudoinverse_entry(std::size_t s, std::size_t t, double zeta_realized) const;

  // M^-1(s, t); requires every singular value to be positive.
  double inverse_entry(std::size_t s, std::size_t t) const;

  // Draws zeta~ (in units of M) with the embedded spectrum's magnitudes as
  // the collision set, reads the entry and adds output noise.
  PseudoinverseEstimate estimate_entry(std::size_t s, std::size_t t, double zeta, double delta,
                                       const NoiseModel &noise, std::uint64_t seed) const;

private:
  SvdDecomposition svd_;
  double z_;
};

// One-shot wrapper around PseudoinverseSimulator.
PseudoinverseEstimate estimate_pseudoinverse_entry(const DenseMatrix &m, std::size_t s,
                                                   std::size_t t, double zeta, double delta,
                                                   const NoiseModel &noise, double z,
                                                   std::uint64_t seed);

// zeta^2 * |M^+_{zeta_realized} e_t|^2, the probability of the "well" outcome
// in the rotation step.
double well_outcome_probability(const DenseMatrix &m, std::size_t t, double zeta,
                                double zeta_realized);

// Default spectral bound n * max|m_ij|.
double default_scale(const DenseMatrix &m);

} // namespace fewpaths
