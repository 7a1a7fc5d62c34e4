#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mgp/contraction.hpp"
#include "mgp/graph.hpp"
#include "mgp/matchers.hpp"
#include "mgp/rating.hpp"
#include "mgp/types.hpp"

namespace mgp {

struct CoarsenConfig {
  RatingKind rating = RatingKind::ExpansionStar2;
  MatcherKind matcher = MatcherKind::Gpa;
  double alpha_contraction = 60.0; // stop threshold factor: n / (alpha k^2)
  NodeID min_coarse_per_block = 20;
  std::size_t max_levels = 50;
  double stall_fraction = 0.05; // stop when a round shrinks less than this
};

/// Preliminary node-to-block map used only to localize matching work.
struct BlockAssignment {
  std::vector<BlockID> block_of;
  BlockID num_blocks = 1;
};

/// Matches an explicit edge subset in rounds: an edge is accepted when it is
/// the best remaining edge (rating desc, edge id asc) at both endpoints;
/// accepted edges retire every edge touching their endpoints.
Matching locally_heaviest_matching(const Graph &g,
                                   std::span<const double> ratings,
                                   std::span<const EdgeID> edges);

/// Cross-block edges whose rating strictly exceeds the rating of the locally
/// matched edge at both endpoints; an unmatched endpoint imposes no bound.
std::vector<EdgeID> gap_graph(const Graph &g, std::span<const double> ratings,
                              const BlockAssignment &prepart,
                              const Matching &local);

/// One matching round: the configured sequential matcher inside each
/// prepartition block, then locally-heaviest matching on the gap graph. A
/// winning gap edge dissolves a conflicting block-local match.
Matching parallel_match_round(const Graph &g, std::span<const double> ratings,
                              const BlockAssignment &prepart,
                              const CoarsenConfig &cfg, std::uint64_t seed,
                              unsigned workers = 1);

/// Repeats match-and-contract rounds until the coarse node count drops to
/// k * max(min_coarse_per_block, n / (alpha k^2)), a round shrinks the graph
/// by less than stall_fraction, or max_levels is reached. Prepartitions for
/// coarser levels are recomputed (coordinate bisection when coordinates are
/// available, id ranges otherwise).
Hierarchy coarsen_until(const Graph &g, BlockID k, const CoarsenConfig &cfg,
                        const BlockAssignment &prepart, std::uint64_t seed,
                        unsigned workers = 1);

/// The global coarsening stop threshold for an input of n nodes.
NodeID coarsening_threshold(NodeID n, BlockID k, const CoarsenConfig &cfg);

} // namespace mgp
