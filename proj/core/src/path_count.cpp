#include "fewpaths/path_count.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fewpaths/traversal.hpp"

namespace fewpaths {

PathCount PathCount::finite(BigInt count) {
  if (count < 0) {
    throw std::invalid_argument("PathCount: negative count");
  }
  return {Kind::Finite, std::move(count)};
}

PathCount PathCount::infinite() { return {Kind::Infinite, 0}; }

PathCount PathCount::overflow(BigInt cap) { return {Kind::Overflow, std::move(cap)}; }

const BigInt &PathCount::value() const {
  if (kind_ != Kind::Finite) {
    throw std::logic_error("PathCount::value on a non-finite count");
  }
  return payload_;
}

const BigInt &PathCount::cap() const {
  if (kind_ != Kind::Overflow) {
    throw std::logic_error("PathCount::cap on a count that did not overflow");
  }
  return payload_;
}

bool PathCount::exceeds(const BigInt &k) const {
  switch (kind_) {
  case Kind::Finite:
    return payload_ > k;
  case Kind::Infinite:
    return true;
  case Kind::Overflow:
    if (payload_ < k) {
      throw std::logic_error("PathCount::exceeds: Overflow(" + payload_.str() +
                             ") is undetermined against " + k.str());
    }
    return true;
  }
  return true;
}

std::string PathCount::to_string() const {
  switch (kind_) {
  case Kind::Finite:
    return payload_.str();
  case Kind::Infinite:
    return "inf";
  case Kind::Overflow:
    return ">" + payload_.str();
  }
  return {};
}

bool PathCountMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const PathCount &c) { return c.is_finite(); });
}

std::optional<BigInt> PathCountMatrix::max_finite() const {
  BigInt best = 0;
  for (const auto &c : entries_) {
    if (!c.is_finite()) {
      return std::nullopt;
    }
    best = std::max(best, c.value());
  }
  return best;
}

namespace {

// Nodes sorted by condensation id, i.e. a topological order whenever the
// cyclic components are ignored.
std::vector<Node> condensation_order(const Condensation &cond) {
  std::vector<Node> order(cond.component.size());
  std::iota(order.begin(), order.end(), Node{0});
  std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) {
    return cond.component[a] < cond.component[b];
  });
  return order;
}

std::vector<PathCount> count_from(const DirectedGraph &g, const Condensation &cond,
                                  const std::vector<Node> &order, Node source,
                                  const BigInt &cap) {
  const std::size_t n = g.size();
  std::vector<BigInt> count(n, 0);
  std::vector<bool> reached(n, false);
  std::vector<bool> infinite(n, false);
  count[source] = 1;
  reached[source] = true;

  // `order` groups each component's nodes together, components in
  // topological order. A cyclic component is entered as a whole: once any of
  // its nodes is reached, all of them are, and every walk through it is
  // unbounded.
  for (std::size_t begin = 0; begin < order.size();) {
    const std::size_t comp = cond.component[order[begin]];
    std::size_t end = begin;
    while (end < order.size() && cond.component[order[end]] == comp) {
      ++end;
    }
    if (cond.cyclic[comp]) {
      const bool entered = std::any_of(order.begin() + begin, order.begin() + end,
                                       [&](Node u) { return reached[u]; });
      for (std::size_t k = begin; entered && k < end; ++k) {
        reached[order[k]] = true;
        infinite[order[k]] = true;
      }
    }
    for (std::size_t k = begin; k < end; ++k) {
      const Node u = order[k];
      if (!reached[u]) {
        continue;
      }
      for (Node v : g.successors(u)) {
        reached[v] = true;
        if (infinite[u]) {
          infinite[v] = true;
        } else {
          count[v] += count[u];
        }
      }
    }
    begin = end;
  }

  std::vector<PathCount> out;
  out.reserve(n);
  for (Node v = 0; v < n; ++v) {
    if (infinite[v]) {
      out.push_back(PathCount::infinite());
    } else if (count[v] > cap) {
      out.push_back(PathCount::overflow(cap));
    } else {
      out.push_back(PathCount::finite(std::move(count[v])));
    }
  }
  return out;
}

void check_cap(const BigInt &cap) {
  if (cap < 1) {
    throw std::invalid_argument("count_paths: cap must be >= 1");
  }
}

} // namespace

std::vector<PathCount> count_paths_from(const DirectedGraph &g, Node source, const BigInt &cap) {
  check_cap(cap);
  if (source >= g.size()) {
    throw std::out_of_range("count_paths_from: source out of range");
  }
  const auto cond = condense(g);
  return count_from(g, cond, condensation_order(cond), source, cap);
}

PathCountMatrix count_paths_oracle(const DirectedGraph &g, const BigInt &cap) {
  check_cap(cap);
  const auto cond = condense(g);
  const auto order = condensation_order(cond);
  PathCountMatrix out(g.size());
  for (Node i = 0; i < g.size(); ++i) {
    auto row = count_from(g, cond, order, i, cap);
    for (Node j = 0; j < g.size(); ++j) {
      out.at(i, j) = std::move(row[j]);
    }
  }
  return out;
}

} // namespace fewpaths
