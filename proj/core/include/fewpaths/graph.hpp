#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace fewpaths {

using Node = std::size_t;

struct Edge {
  Node from = 0;
  Node to = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

// Simple directed graph on nodes 0..n-1. Edges have set semantics; self-loops
// are allowed and count as cycles. Successor lists are kept sorted so that
// every traversal is deterministic.
class DirectedGraph {
public:
  explicit DirectedGraph(std::size_t n);
  DirectedGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Returns false when the edge was already present.
  bool add_edge(Node from, Node to);
  bool has_edge(Node from, Node to) const;

  std::span<const Node> successors(Node u) const { return adjacency_.at(u); }
  std::size_t out_degree(Node u) const { return adjacency_.at(u).size(); }

  // All edges in lexicographic (from, to) order.
  std::vector<Edge> edges() const;

  friend bool operator==(const DirectedGraph &, const DirectedGraph &) = default;

private:
  std::vector<std::vector<Node>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Edge-list text format:
//   n m
//   u v      (m lines, 0-based ids)
// Blank lines and anything after '#' are ignored.
DirectedGraph read_edge_list(std::istream &in);
void write_edge_list(std::ostream &out, const DirectedGraph &g);

DirectedGraph load_edge_list(const std::filesystem::path &path);
void save_edge_list(const std::filesystem::path &path, const DirectedGraph &g);

} // namespace fewpaths
