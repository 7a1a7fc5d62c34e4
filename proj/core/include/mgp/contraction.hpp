#pragma once

#include <vector>

#include "mgp/graph.hpp"
#include "mgp/matching.hpp"
#include "mgp/types.hpp"

namespace mgp {

struct ContractionResult {
  Graph graph;
  std::vector<NodeID> coarse_map; // fine node -> coarse node
};

// Contracts every matched pair into one coarse node: c(x) = c(u) + c(v),
// parallel coarse edges merged by summing weights, matched edges vanish.
// Coarse ids are assigned in fine-id scan order. Coarse coordinates, when the
// fine graph has them, are the node-weight-weighted average of the pair.
// Throws std::invalid_argument if m is not a valid matching on g.
ContractionResult contract_matching(const Graph &g, const Matching &m);

struct HierarchyLevel {
  Graph graph; // the fine graph of this level
  Matching matching;
  std::vector<NodeID> coarse_map;
};

// The stack of levels produced by coarsening. levels[0].graph is the input;
// coarsest() is the result of the final contraction (the input itself when no
// contraction happened).
struct Hierarchy {
  std::vector<HierarchyLevel> levels;
  Graph coarsest_graph;

  std::size_t level_count() const { return levels.size(); }
  const Graph &coarsest() const { return coarsest_graph; }
};

} // namespace mgp
