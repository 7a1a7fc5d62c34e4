#pragma once

#include <cstdint>

#include "mgp/fm.hpp"
#include "mgp/graph.hpp"
#include "mgp/partition.hpp"
#include "mgp/types.hpp"

namespace mgp {

struct InitConfig {
  int repeats = 1;         // independent k-way constructions, best kept
  int fm_passes = 3;       // refinement passes after each bisection
  int growing_trials = 4;  // region-growing restarts per bisection
};

struct InitResult {
  Partition partition;
  bool balanced = true; // imbalance was zero under the given spec
};

/// Splits g into two blocks {0, 1} sized for kl respectively kr final blocks
/// of capacity l_max each: greedy region growing toward the proportional
/// target from a few random seed nodes, then FM passes under the caps
/// (kl * l_max, kr * l_max). Best try by (pair overflow, cut) wins.
Partition bisect(const Graph &g, BlockID kl, BlockID kr, NodeWeight l_max,
                 const InitConfig &cfg, const RefineConfig &refine,
                 std::uint64_t seed);

/// k-way partition of g by recursive bisection with ceil/floor block splits.
/// Runs cfg.repeats independent constructions and keeps the best by
/// (imbalance, cut); repeat r always draws the same seed stream regardless
/// of how many repeats follow it.
InitResult initial_partition(const Graph &g, const BalanceSpec &spec,
                             const InitConfig &cfg, const RefineConfig &refine,
                             std::uint64_t seed);

} // namespace mgp
