#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mgp/coarsen.hpp"
#include "mgp/fm.hpp"
#include "mgp/initial_partition.hpp"
#include "mgp/partition.hpp"
#include "mgp/types.hpp"

namespace mgp {

/// When to stop the global refinement iterations of a level. The decision
/// looks at the (imbalance, cut) tuple, which never worsens.
enum class StopRule {
  Once,        // a single iteration
  NoChange,    // stop when an iteration leaves the tuple unchanged
  TwoNoChange, // stop after two consecutive unchanged iterations
};

std::string_view stop_rule_name(StopRule rule);
std::optional<StopRule> parse_stop_rule(std::string_view name);

struct RunConfig {
  BlockID k = 2;
  double epsilon = 0.03;
  CoarsenConfig coarsen;
  InitConfig init;
  RefineConfig refine;
  int max_global_iterations = 15;
  StopRule stop_rule = StopRule::NoChange;
  // Blocks of the matching prepartition. Fixed independently of `workers` so
  // results do not depend on the degree of parallelism.
  BlockID prepart_blocks = 8;
  unsigned workers = 1;
  std::uint64_t master_seed = 1;
};

struct LevelStats {
  NodeID nodes = 0;
  EdgeID edges = 0;
  EdgeWeight cut_before = 0;
  EdgeWeight cut_after = 0;
  NodeWeight imbalance_before = 0;
  NodeWeight imbalance_after = 0;
  int iterations = 0;
};

struct RunStats {
  BalanceSpec spec;
  std::vector<LevelStats> levels; // coarsest level first
  double seconds_coarsen = 0.0;
  double seconds_initial = 0.0;
  double seconds_refine = 0.0;
  double seconds_total = 0.0;
  std::size_t pair_refinements = 0;
  EdgeWeight cut = 0;
  NodeWeight imbalance = 0;
  bool balanced = false; // final imbalance is zero; false flags a miss
  std::uint64_t master_seed = 0;
};

struct RunResult {
  Partition partition;
  RunStats stats;
};

/// Seed of one FM leg, reproducible from its coordinates alone. `leg`
/// numbers the seeded searches of a pair within one color round: local
/// iteration i uses legs 2i and 2i + 1.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t level,
                          std::uint64_t global_iter, std::uint64_t color,
                          std::uint64_t pair, std::uint64_t leg);

/// Full multilevel run: coarsen, partition the coarsest graph, then project
/// level by level with scheduled pairwise refinement. Pairs of one color
/// round all read the same snapshot and their moves are applied in pair
/// order, so the partition is identical for any worker count.
/// Throws std::invalid_argument when k < 1 or k > n.
RunResult run_multilevel(const Graph &g, const RunConfig &cfg);

} // namespace mgp
