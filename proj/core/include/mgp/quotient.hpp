#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mgp/graph.hpp"
#include "mgp/partition.hpp"
#include "mgp/types.hpp"

namespace mgp {

/// Block adjacency of a partition: one edge per unordered block pair joined
/// by at least one cut edge, sorted by (a, b) with a < b, annotated with the
/// total crossing weight.
struct QuotientGraph {
  struct Pair {
    BlockID a;
    BlockID b;
    EdgeWeight weight;
  };

  BlockID k = 0;
  std::vector<Pair> edges;
  std::vector<int> degree; // per block

  int max_degree() const;
};

QuotientGraph build_quotient(const Graph &g, const Partition &p);

struct EdgeColoring {
  std::vector<int> color; // per quotient edge
  int num_colors = 0;     // colors are 0..num_colors-1
};

/// Distributed-style edge coloring with palette {0, .., 2*max_degree - 2}.
/// Each round every uncolored block flips a coin; active blocks propose a
/// random uncolored incident edge to its other endpoint and send their free
/// color list, passive blocks serve the lowest-id proposer with the smallest
/// color free on both sides. Falls back to a greedy sweep if the randomized
/// protocol has not finished after 64 * |edges| rounds.
EdgeColoring color_edges(const QuotientGraph &q, std::uint64_t seed);

/// True when no two quotient edges sharing a block received the same color.
bool is_proper(const QuotientGraph &q, const EdgeColoring &c);

/// Color classes in ascending color order; each inner vector holds indices
/// into q.edges and forms a set of pairwise block-disjoint pairs.
std::vector<std::vector<std::size_t>> schedule_rounds(const QuotientGraph &q,
                                                      const EdgeColoring &c);

} // namespace mgp
