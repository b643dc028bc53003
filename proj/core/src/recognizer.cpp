#include "fewpaths/recognizer.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fewpaths/layered.hpp"
#include "fewpaths/path_count.hpp"
#include "fewpaths/rng.hpp"
#include "fewpaths/spectral.hpp"

namespace fewpaths {

namespace {

constexpr std::uint64_t kEntryReadStream = 0x52454144ULL;

DenseMatrix layered_laplacian(const DirectedGraph &g) {
  return counting_laplacian(layer_graph(g));
}

} // namespace

std::string_view to_string(VerdictReason reason) noexcept {
  switch (reason) {
  case VerdictReason::Accepted:
    return "Accepted";
  case VerdictReason::SmallSingularValue:
    return "SmallSingularValue";
  case VerdictReason::CycleDetected:
    return "CycleDetected";
  case VerdictReason::EntryExceedsK:
    return "EntryExceedsK";
  case VerdictReason::NoSTPath:
    return "NoSTPath";
  }
  return "Accepted";
}

StconRecognizer::StconRecognizer(const DirectedGraph &g)
    : n_(g.size()), predecessors_(g.size()),
      simulator_(layered_laplacian(g), static_cast<double>(g.size() * (g.size() + 1))) {
  for (const auto &e : g.edges()) {
    predecessors_[e.to].push_back(e.from);
  }
}

RecognizerVerdict StconRecognizer::decide(Node s, Node t, std::uint64_t k, const NoiseModel &noise,
                                          bool strict) const {
  if (s >= n_ || t >= n_) {
    throw std::out_of_range("recognize: s or t out of range");
  }
  if (k == 0) {
    throw std::invalid_argument("recognize: k must be >= 1");
  }
  const std::size_t n_lay = layered_size();

  RecognizerVerdict verdict;
  auto &params = verdict.parameters;
  params.k = k;
  params.delta = 1.0 / (2.0 * static_cast<double>(n_lay) * static_cast<double>(k));
  params.seed = noise.seed;
  params.layered_size = n_lay;
  params.strict = strict;
  params.mode = noise.mode;

  const auto spectrum =
      spectrum_estimate(simulator_.decomposition(), noise.with(params.delta, params.epsilon));
  verdict.spectrum_failed = spectrum.failed;
  verdict.sigma_min_estimate = spectrum.min();
  if (verdict.sigma_min_estimate < params.delta) {
    verdict.reason = VerdictReason::SmallSingularValue;
    return verdict;
  }

  // Entries ((i,0),(j,n)) of the inverse, each read once with its own noise
  // stream. Strict mode reads the whole inverse.
  params.entries_read = strict ? n_lay * n_lay : n_ * n_;
  const NoiseModel entry_noise =
      noise.with(params.entry_accuracy,
                 params.epsilon_entries / static_cast<double>(params.entries_read));

  auto read = [&](Node a, Node b) {
    NoiseSource source(entry_noise,
                       stream_seed(kEntryReadStream, (std::uint64_t{a} << 32) ^ b));
    const bool failed = source.draw_failure(entry_noise.failure_prob);
    if (failed) {
      ++verdict.failed_entry_reads;
    }
    const double exact = simulator_.inverse_entry(a, b);
    return std::round(exact + source.perturbation(exact, away_from_nearest_integer(exact), failed));
  };

  std::vector<double> sweep(n_ * n_);
  for (Node i = 0; i < n_; ++i) {
    for (Node j = 0; j < n_; ++j) {
      sweep[i * n_ + j] = read(layered_node(i, 0, n_), layered_node(j, n_, n_));
    }
  }
  std::vector<double> full;
  if (strict) {
    full.resize(n_lay * n_lay);
    for (Node a = 0; a < n_lay; ++a) {
      for (Node b = 0; b < n_lay; ++b) {
        const bool in_sweep = a < n_ && b >= n_ * n_;
        full[a * n_lay + b] = in_sweep ? sweep[a * n_ + (b - n_ * n_)] : read(a, b);
      }
    }
  }

  auto on_cycle = [&](Node i) {
    if (sweep[i * n_ + i] >= 2.0) {
      return true;
    }
    for (Node x : predecessors_[i]) {
      if (sweep[i * n_ + x] >= 1.0) {
        return true;
      }
    }
    return false;
  };
  for (Node i = 0; i < n_; ++i) {
    if (on_cycle(i)) {
      verdict.reason = VerdictReason::CycleDetected;
      verdict.cycle_node = i;
      return verdict;
    }
  }
  const double bound = static_cast<double>(k);
  for (Node i = 0; i < n_; ++i) {
    for (Node j = 0; j < n_; ++j) {
      if (sweep[i * n_ + j] > bound) {
        verdict.reason = VerdictReason::EntryExceedsK;
        verdict.pair = std::pair{i, j};
        return verdict;
      }
    }
  }
  if (strict) {
    for (Node a = 0; a < n_lay; ++a) {
      for (Node b = 0; b < n_lay; ++b) {
        if (full[a * n_lay + b] > bound) {
          verdict.reason = VerdictReason::EntryExceedsK;
          verdict.pair = std::pair{a % n_, b % n_};
          return verdict;
        }
      }
    }
  }
  if (sweep[s * n_ + t] < 1.0) {
    verdict.reason = VerdictReason::NoSTPath;
    return verdict;
  }
  verdict.accepted = true;
  verdict.reason = VerdictReason::Accepted;
  return verdict;
}

RecognizerVerdict recognize_stcon_sf(const DirectedGraph &g, Node s, Node t, std::uint64_t k,
                                     const NoiseModel &noise, bool strict) {
  return StconRecognizer(g).decide(s, t, k, noise, strict);
}

bool stcon_sf_member(const DirectedGraph &g, Node s, Node t, std::uint64_t k) {
  const BigInt bound = k;
  const auto counts = count_paths_oracle(g, bound + 1);
  for (Node i = 0; i < g.size(); ++i) {
    for (Node j = 0; j < g.size(); ++j) {
      if (counts.at(i, j).exceeds(bound)) {
        return false;
      }
    }
  }
  return counts.at(s, t).value() >= 1;
}

} // namespace fewpaths
