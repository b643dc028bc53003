#pragma once

#include <cstdint>

#include "fewpaths/graph.hpp"

namespace fewpaths {

// The "exponential abort" chain on 2*half nodes. With 1-based labels the spine
// is 1 -> 3 -> ... -> 2*half-1, every spine node 2i-1 also points to the sink
// 2i. Node ids here are 0-based, so label x becomes id x-1. Every pairwise
// walk count is at most one, yet a uniform random walk from id 0 reaches id
// 2*half-1 with probability 2^-(half-1).
DirectedGraph gen_chain_figure1(std::size_t half);

// m triangles glued in a chain on 2m+1 nodes: hub 2i points to 2i+1 and
// 2i+2, and 2i+1 points to 2i+2. The source (id 0) reaches the sink (id 2m)
// along 2^m walks.
DirectedGraph gen_diamond_chain(std::size_t m);

// Edge (i, j), i < j, kept independently with probability `density`.
// density 0 gives the edgeless graph, density 1 the transitive tournament.
DirectedGraph gen_random_dag(std::size_t n, double density, std::uint64_t seed);

// g2's nodes are shifted by g1.size(); no edges between the parts.
DirectedGraph disjoint_union(const DirectedGraph &g1, const DirectedGraph &g2);

// Lange's three small examples (1-based labels in the literature, 0-based
// here): left is unambiguous for (1,6) but not reach-unambiguous from 1,
// middle is reach-unambiguous from 1 but not strongly unambiguous, right is
// strongly unambiguous.
enum class LangeExample { Left, Middle, Right };
DirectedGraph lange_example(LangeExample which);

} // namespace fewpaths
