#pragma once

#include <span>
#include <vector>

#include "mgp/graph.hpp"
#include "mgp/types.hpp"

namespace mgp {

// Balance constraint: every block must weigh at most
//   l_max = floor((1 + epsilon) * c(V) / k) + max_v c(v),
// computed once on the input graph and held fixed across all levels.
struct BalanceSpec {
  double epsilon = 0.03;
  BlockID k = 2;
  NodeWeight l_max = 0;
};

/// Evaluates the l_max formula on g. epsilon is taken at microunit (1e-6)
/// resolution so the floor is computed in exact integer arithmetic.
BalanceSpec make_balance_spec(const Graph &g, BlockID k, double epsilon);

// Block assignment with cached block weights and cut value. The caches are
// maintained incrementally by move_node and always match a from-scratch
// recomputation.
struct Partition {
  std::vector<BlockID> block_of;
  BlockID k = 0;
  std::vector<NodeWeight> block_weight;
  EdgeWeight cut = 0;

  static Partition from_assignment(const Graph &g, std::vector<BlockID> blocks,
                                   BlockID k);

  /// Moves v to block `to`, updating cut and block weights incrementally.
  void move_node(const Graph &g, NodeID v, BlockID to);

  /// True iff the cached cut and block weights match a recomputation on g.
  bool consistent_with(const Graph &g) const;
};

/// Total weight of edges whose endpoints lie in different blocks, each
/// undirected edge counted once.
EdgeWeight cut_weight(const Graph &g, std::span<const BlockID> block_of);

/// max over blocks of max(0, block_weight - l_max).
NodeWeight imbalance(const Partition &p, const BalanceSpec &spec);

/// Pulls a coarse partition down to the fine graph through coarse_map;
/// caches are recomputed on the fine graph.
Partition project_partition(const Graph &fine, const Partition &coarse,
                            std::span<const NodeID> coarse_map);

} // namespace mgp
