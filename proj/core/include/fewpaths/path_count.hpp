#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fewpaths/graph.hpp"

namespace fewpaths {

using BigInt = boost::multiprecision::cpp_int;

// Number of walks between two nodes. The empty walk counts, so a node always
// reaches itself at least once. Infinite when a cycle sits on some walk;
// Overflow(cap) when the exact count is finite but larger than cap.
class PathCount {
public:
  enum class Kind { Finite, Infinite, Overflow };

  PathCount() = default;

  static PathCount finite(BigInt count);
  static PathCount infinite();
  static PathCount overflow(BigInt cap);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
  bool is_overflow() const noexcept { return kind_ == Kind::Overflow; }

  // The exact count; throws std::logic_error unless finite.
  const BigInt &value() const;
  // The cap that was exceeded; throws std::logic_error unless overflow.
  const BigInt &cap() const;

  // True when the count is certainly larger than k. Throws std::logic_error
  // for Overflow(cap) with cap < k, where the answer is not determined.
  bool exceeds(const BigInt &k) const;

  // "17", "inf" or ">cap".
  std::string to_string() const;

  friend bool operator==(const PathCount &, const PathCount &) = default;

private:
  PathCount(Kind kind, BigInt payload) : kind_(kind), payload_(std::move(payload)) {}

  Kind kind_ = Kind::Finite;
  BigInt payload_ = 0;
};

class PathCountMatrix {
public:
  explicit PathCountMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const noexcept { return n_; }

  const PathCount &at(Node i, Node j) const { return entries_.at(i * n_ + j); }
  PathCount &at(Node i, Node j) { return entries_.at(i * n_ + j); }

  bool all_finite() const;
  // Largest finite entry; nullopt if some entry is infinite or overflowed.
  std::optional<BigInt> max_finite() const;

  friend bool operator==(const PathCountMatrix &, const PathCountMatrix &) = default;

private:
  std::size_t n_;
  std::vector<PathCount> entries_;
};

// Exact walk counts from one source: dynamic programming over the
// condensation in topological order. Targets behind a cyclic component are
// Infinite. cap must be >= 1.
std::vector<PathCount> count_paths_from(const DirectedGraph &g, Node source, const BigInt &cap);

// All-pairs version of count_paths_from.
PathCountMatrix count_paths_oracle(const DirectedGraph &g, const BigInt &cap);

} // namespace fewpaths
