#pragma once

#include <cstdint>
#include <optional>

#include "fewpaths/graph.hpp"
#include "fewpaths/noise.hpp"
#include "fewpaths/pseudoinverse.hpp"

namespace fewpaths {

struct CountParameters {
  std::uint64_t bound = 1; // P
  double zeta = 0.0;
  double delta = 0.0;
  double accuracy = 0.0;     // entry accuracy requested from the noise model
  double failure_prob = 0.0; // entry failure probability
  double scale = 1.0;        // Z
  double zeta_realized = 0.0;
  std::uint64_t seed = 0;
  std::size_t matrix_size = 0; // n of the inverted matrix (after layering)
  bool layered = false;
  NoiseMode mode = NoiseMode::Exact;
};

struct CountResult {
  std::uint64_t count = 0;
  double raw_value = 0.0;
  // 1/2 minus the distance from raw_value to count: how far the estimate is
  // from the nearest rounding boundary.
  double margin = 0.0;
  bool failed = false; // the simulated entry read was flagged as failed
  CountParameters parameters;
};

// Rounds half away from zero and enforces the confidence guard: raw values
// below -tolerance, farther than `tolerance` from an integer, or with a
// margin under 0.05 raise PromiseViolationSuspected.
CountResult round_count(double raw_value, double tolerance, CountParameters parameters,
                        bool failed = false);

// Counting under the all-pairs promise N(i,j) <= P (which implies the graph is
// acyclic). The counting Laplacian then has sigma_n >= 1/(nP), so the entry
// L^-1(s,t) = N(s,t) is read without truncation (zeta = 1/(2nP),
// delta = 1/(4nP), Z = n) and rounded with tolerance 1/3. The SVD is computed
// once; count() can be called for many pairs.
class StronglyFewCounter {
public:
  StronglyFewCounter(const DirectedGraph &g, std::uint64_t bound);

  // The noise model is used as given; its accuracy should not exceed 1/3.
  CountResult count(Node s, Node t, const NoiseModel &noise) const;

  const PseudoinverseSimulator &simulator() const noexcept { return simulator_; }

private:
  std::size_t n_;
  std::uint64_t bound_;
  PseudoinverseSimulator simulator_;
};

CountResult count_paths_strongly_few(const DirectedGraph &g, Node s, Node t, std::uint64_t bound,
                                     const NoiseModel &noise);

// Counting under the endpoint promise N(s,j) <= P and N(j,t) <= P. Cyclic
// inputs are layered first, with (s,t) mapped to ((s,0),(t,n)). Uses Z = n,
// zeta = delta = 1/(10 n^2 P^2) and entry accuracy and failure probability
// 1/5 (noise mode and seed come from the caller); the truncated entry is
// within 1/5 of N(s,t), and rounding uses tolerance 2/5.
class FewEndpointsCounter {
public:
  FewEndpointsCounter(const DirectedGraph &g, std::uint64_t bound);

  CountResult count(Node s, Node t, const NoiseModel &noise) const;

  bool layered() const noexcept { return layered_; }
  std::size_t matrix_size() const noexcept { return simulator_.size(); }
  const PseudoinverseSimulator &simulator() const noexcept { return simulator_; }

  double zeta() const noexcept;

private:
  std::size_t n_;
  std::uint64_t bound_;
  bool layered_;
  PseudoinverseSimulator simulator_;
};

CountResult count_paths_few_endpoints(const DirectedGraph &g, Node s, Node t, std::uint64_t bound,
                                      const NoiseModel &noise);

} // namespace fewpaths
