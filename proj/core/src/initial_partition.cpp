#include "mgp/initial_partition.hpp"

#include <algorithm>
#include <cassert>

#include "mgp/pqueue.hpp"
#include "mgp/seeds.hpp"

namespace mgp {

namespace {

/// Grows block 0 from a random seed node until it reaches target_weight,
/// always absorbing the frontier node with the largest
/// (weight to region - weight to outside). Disconnected remainders restart
/// from the heaviest unassigned node.
std::vector<BlockID> grow_region(const Graph &g, NodeWeight target_weight,
                                 Rng &rng) {
  const NodeID n = g.n();
  std::vector<BlockID> blocks(n, 1);
  if (n == 0) {
    return blocks;
  }
  AddressableMaxHeap frontier(n);
  std::vector<char> in_region(n, 0);
  auto fresh_gain = [&](NodeID v) {
    EdgeWeight gain = 0;
    for (const Arc &arc : g.arcs(v)) {
      gain += in_region[arc.target] ? arc.weight : -arc.weight;
    }
    return gain;
  };
  auto absorb = [&](NodeID v) {
    in_region[v] = 1;
    blocks[v] = 0;
    if (frontier.contains(v)) {
      frontier.remove(v);
    }
    for (const Arc &arc : g.arcs(v)) {
      const NodeID w = arc.target;
      if (in_region[w]) {
        continue;
      }
      if (frontier.contains(w)) {
        auto key = frontier.key_of(w);
        key.primary += 2 * arc.weight;
        frontier.update(w, key);
      } else {
        frontier.push(w, {fresh_gain(w), rng()});
      }
    }
  };
  auto heaviest_unassigned = [&]() {
    NodeID best = kInvalidNode;
    for (NodeID v = 0; v < n; ++v) {
      if (!in_region[v] &&
          (best == kInvalidNode ||
           g.node_weight(v) > g.node_weight(best))) {
        best = v;
      }
    }
    return best;
  };

  NodeWeight region_weight = 0;
  NodeID assigned = 0;
  NodeID start = static_cast<NodeID>(rand_index(rng, n));
  region_weight += g.node_weight(start);
  absorb(start);
  ++assigned;
  while (region_weight < target_weight && assigned + 1 < n) {
    NodeID next;
    if (!frontier.empty()) {
      next = frontier.top();
      frontier.pop();
    } else {
      next = heaviest_unassigned();
      if (next == kInvalidNode) {
        break;
      }
    }
    region_weight += g.node_weight(next);
    absorb(next);
    ++assigned;
  }
  return blocks;
}

} // namespace

Partition bisect(const Graph &g, BlockID kl, BlockID kr, NodeWeight l_max,
                 const InitConfig &cfg, const RefineConfig &refine,
                 std::uint64_t seed) {
  assert(kl >= 1 && kr >= 1);
  const NodeWeight total = g.total_node_weight();
  const NodeWeight target =
      (total * kl + (kl + kr) / 2) / (kl + kr); // nearest integer
  const PairBounds bounds{kl * l_max, kr * l_max};
  const BlockPair pair{0, 1};

  Partition best;
  NodeWeight best_overflow = 0;
  bool have_best = false;
  const int trials = std::max(1, cfg.growing_trials);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(seed_hash({seed, 0x67726f77ULL, static_cast<std::uint64_t>(trial)}));
    Partition p =
        Partition::from_assignment(g, grow_region(g, target, rng), 2);
    for (int pass = 0; pass < cfg.fm_passes; ++pass) {
      const Band band = extract_band(g, p, pair, refine.bfs_depth);
      const std::uint64_t pass_seed =
          seed_hash({seed, 0x696e6974666dULL,
                     static_cast<std::uint64_t>(trial),
                     static_cast<std::uint64_t>(pass)});
      const MoveLog log = fm_pass(g, band, p, bounds, refine, pass_seed);
      if (log.best_prefix == 0) {
        break;
      }
    }
    const NodeWeight overflow = pair_overflow(p, pair, bounds);
    if (!have_best || overflow < best_overflow ||
        (overflow == best_overflow && p.cut < best.cut)) {
      best = std::move(p);
      best_overflow = overflow;
      have_best = true;
    }
  }
  return best;
}

namespace {

void recurse(const Graph &sub, const std::vector<NodeID> &to_parent,
             BlockID kk, BlockID base, NodeWeight l_max,
             const InitConfig &cfg, const RefineConfig &refine,
             std::uint64_t seed, std::vector<BlockID> &out) {
  if (kk == 1) {
    for (NodeID v = 0; v < sub.n(); ++v) {
      out[to_parent[v]] = base;
    }
    return;
  }
  if (sub.n() <= static_cast<NodeID>(kk)) {
    // Fewer nodes than blocks: one node per block, the rest stay empty.
    for (NodeID v = 0; v < sub.n(); ++v) {
      out[to_parent[v]] = base + static_cast<BlockID>(v);
    }
    return;
  }
  const BlockID kl = (kk + 1) / 2;
  const BlockID kr = kk - kl;
  const Partition split =
      bisect(sub, kl, kr, l_max, cfg, refine,
             seed_hash({seed, 0x626973656374ULL,
                        static_cast<std::uint64_t>(base),
                        static_cast<std::uint64_t>(kk)}));
  std::vector<NodeID> side_nodes[2];
  for (NodeID v = 0; v < sub.n(); ++v) {
    side_nodes[split.block_of[v] == 0 ? 0 : 1].push_back(v);
  }
  const BlockID side_k[2] = {kl, kr};
  const BlockID side_base[2] = {base, base + kl};
  for (int s = 0; s < 2; ++s) {
    if (side_nodes[s].empty()) {
      continue;
    }
    const Subgraph part = induced_subgraph(sub, side_nodes[s]);
    std::vector<NodeID> lifted(part.graph.n());
    for (NodeID v = 0; v < part.graph.n(); ++v) {
      lifted[v] = to_parent[part.to_parent_node[v]];
    }
    recurse(part.graph, lifted, side_k[s], side_base[s], l_max, cfg, refine,
            seed, out);
  }
}

} // namespace

InitResult initial_partition(const Graph &g, const BalanceSpec &spec,
                             const InitConfig &cfg, const RefineConfig &refine,
                             std::uint64_t seed) {
  InitResult out;
  if (spec.k == 1) {
    out.partition =
        Partition::from_assignment(g, std::vector<BlockID>(g.n(), 0), 1);
    out.balanced = imbalance(out.partition, spec) == 0;
    return out;
  }
  std::vector<NodeID> identity(g.n());
  for (NodeID v = 0; v < g.n(); ++v) {
    identity[v] = v;
  }
  bool have_best = false;
  NodeWeight best_imbalance = 0;
  const int repeats = std::max(1, cfg.repeats);
  for (int rep = 0; rep < repeats; ++rep) {
    std::vector<BlockID> blocks(g.n(), 0);
    recurse(g, identity, spec.k, 0, spec.l_max, cfg, refine,
            seed_hash({seed, 0x726570ULL, static_cast<std::uint64_t>(rep)}),
            blocks);
    Partition p = Partition::from_assignment(g, std::move(blocks), spec.k);
    const NodeWeight imb = imbalance(p, spec);
    if (!have_best || imb < best_imbalance ||
        (imb == best_imbalance && p.cut < out.partition.cut)) {
      out.partition = std::move(p);
      best_imbalance = imb;
      have_best = true;
    }
  }
  out.balanced = best_imbalance == 0;
  return out;
}

} // namespace mgp
