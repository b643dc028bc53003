#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fewpaths/graph.hpp"
#include "fewpaths/noise.hpp"
#include "fewpaths/pseudoinverse.hpp"

namespace fewpaths {

enum class VerdictReason { Accepted, SmallSingularValue, CycleDetected, EntryExceedsK, NoSTPath };

std::string_view to_string(VerdictReason reason) noexcept;

struct RecognizerParameters {
  std::uint64_t k = 1;
  double delta = 0.0;           // spectrum accuracy 1/(2 n_lay k)
  double epsilon = 1.0 / 6.0;   // spectrum failure probability
  double epsilon_entries = 1.0 / 6.0; // total failure budget of the entry reads
  double entry_accuracy = 1.0 / 3.0;
  std::uint64_t seed = 0;
  std::size_t layered_size = 0;
  std::size_t entries_read = 0;
  bool strict = false;
  NoiseMode mode = NoiseMode::Exact;
};

struct RecognizerVerdict {
  bool accepted = false;
  VerdictReason reason = VerdictReason::Accepted;
  std::optional<Node> cycle_node;               // CycleDetected
  std::optional<std::pair<Node, Node>> pair;    // EntryExceedsK
  double sigma_min_estimate = 0.0;
  bool spectrum_failed = false;
  std::size_t failed_entry_reads = 0;
  RecognizerParameters parameters;
};

// Decides membership of <G, s, t, 1^k> in the language "every N(i,j) <= k and
// N(s,t) >= 1". The layered graph and the SVD of its counting Laplacian are
// built once; decide() can then be called for many (s, t, k, noise).
//
// decide() estimates the spectrum with accuracy delta = 1/(2 n_lay k) and
// failure probability 1/6, rejecting if any estimate is below delta. Otherwise
// it reads L^-1((i,0),(j,n)) for all i, j with accuracy 1/3 each and a failure
// probability of (1/6)/reads each, and rejects on a cycle, on an entry above
// k, or on a zero (s,t) entry. Strict mode also checks every entry of L^-1
// against k.
//
// The layered graph only sees walks of length <= n-1, so a diagonal entry
// ((i,0),(i,n)) >= 2 misses cycles of length exactly n (a 2-cycle on two
// nodes, a self-loop on one). A cycle through i is therefore also reported
// when ((i,0),(x,n)) >= 1 for some x with an edge x -> i: the walk closes
// into a cycle, and every cycle through i has such a prefix of length <= n-1.
class StconRecognizer {
public:
  explicit StconRecognizer(const DirectedGraph &g);

  RecognizerVerdict decide(Node s, Node t, std::uint64_t k, const NoiseModel &noise,
                           bool strict = false) const;

  std::size_t graph_size() const noexcept { return n_; }
  std::size_t layered_size() const noexcept { return simulator_.size(); }
  const PseudoinverseSimulator &simulator() const noexcept { return simulator_; }

private:
  std::size_t n_;
  std::vector<std::vector<Node>> predecessors_;
  PseudoinverseSimulator simulator_;
};

RecognizerVerdict recognize_stcon_sf(const DirectedGraph &g, Node s, Node t, std::uint64_t k,
                                     const NoiseModel &noise, bool strict = false);

// Membership predicate computed with the exact oracle.
bool stcon_sf_member(const DirectedGraph &g, Node s, Node t, std::uint64_t k);

} // namespace fewpaths
