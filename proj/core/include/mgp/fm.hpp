#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mgp/graph.hpp"
#include "mgp/partition.hpp"
#include "mgp/types.hpp"

namespace mgp {

enum class QueueStrategy { TopGain, Alternate, TopGainMaxLoad, MaxLoad };

std::string_view queue_name(QueueStrategy q);
std::optional<QueueStrategy> parse_queue(std::string_view name);

struct RefineConfig {
  QueueStrategy queue = QueueStrategy::TopGain;
  int bfs_depth = 5;            // band radius around the pair boundary
  double alpha_patience = 0.05; // fraction of the smaller band side
  int local_iterations = 3;     // pair refinements per color round
};

struct BlockPair {
  BlockID a;
  BlockID b;
};

/// Per-side weight caps; both sides at l_max for plain balance, uneven for
/// the split targets used during recursive bisection.
struct PairBounds {
  NodeWeight max_a = 0;
  NodeWeight max_b = 0;
};

/// Weight by which the pair's blocks exceed their caps; the maximum of the
/// two overflows, 0 when both respect the bounds.
NodeWeight pair_overflow(const Partition &p, BlockPair pair, PairBounds bounds);

/// Gain of moving v into `to`: edge weight to `to` minus edge weight to v's
/// current block, over all neighbors. Equals the cut reduction of the move.
EdgeWeight move_gain(const Graph &g, const Partition &p, NodeID v, BlockID to);

/// Nodes of the pair's blocks within bfs_depth hops of the boundary. depth[i]
/// is 1 for boundary nodes (an edge to the opposite block of the pair) and
/// grows along BFS layers that never leave the two blocks. frontier[i] marks
/// nodes with at least one neighbor outside the band.
struct Band {
  BlockPair pair;
  std::vector<NodeID> nodes;
  std::vector<int> depth;     // parallel to nodes
  std::vector<char> frontier; // parallel to nodes
  std::vector<std::uint32_t> local; // g.n() entries, index into nodes or -1

  bool contains(NodeID v) const {
    return local[v] != static_cast<std::uint32_t>(-1);
  }
};

Band extract_band(const Graph &g, const Partition &p, BlockPair pair,
                  int bfs_depth);

struct Move {
  NodeID node;
  BlockID from;
  BlockID to;
  EdgeWeight gain;
  NodeWeight overflow_after; // pair overflow once this move is applied
  EdgeWeight cut_after;      // global cut once this move is applied
};

struct MoveLog {
  std::vector<Move> moves;      // the full walk, in execution order
  std::size_t best_prefix = 0;  // partition was rolled back to this prefix
  NodeWeight best_overflow = 0; // pair overflow after the best prefix
  EdgeWeight best_cut = 0;      // global cut after the best prefix
};

/// One localized FM pass on the band. Mutates p through the whole walk, then
/// rolls back to the prefix with the lexicographically smallest
/// (pair overflow, cut); ties keep the shorter prefix. Individual moves may
/// overshoot the bounds. Each node moves at most once.
MoveLog fm_pass(const Graph &g, const Band &band, Partition &p,
                PairBounds bounds, const RefineConfig &cfg,
                std::uint64_t seed);

struct PairResult {
  std::vector<Move> moves;       // winning move sequence, ready to replay
  EdgeWeight delta_cut = 0;      // cut change when moves are applied
  NodeWeight delta_overflow = 0; // pair overflow change
  bool adopted_b = false;        // second search won
};

/// Two independently seeded FM passes over one shared band, both starting
/// from p; the lexicographically better (pair overflow, cut) outcome is
/// returned (tie: the first seed). p itself is not modified; callers replay
/// result.moves. The result never worsens the tuple.
PairResult refine_pair(const Graph &g, const Partition &p, BlockPair pair,
                       PairBounds bounds, const RefineConfig &cfg,
                       std::uint64_t seed_a, std::uint64_t seed_b);

PairResult refine_pair(const Graph &g, const Partition &p, BlockPair pair,
                       const BalanceSpec &spec, const RefineConfig &cfg,
                       std::uint64_t seed_a, std::uint64_t seed_b);

void apply_moves(const Graph &g, Partition &p, std::span<const Move> moves);

} // namespace mgp
