#include "mgp/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgp {

BalanceSpec make_balance_spec(const Graph &g, BlockID k, double epsilon) {
  if (k < 1) {
    throw std::invalid_argument("k must be at least 1");
  }
  if (epsilon < 0.0) {
    throw std::invalid_argument("epsilon must be nonnegative");
  }
  const std::int64_t eps_micro = std::llround(epsilon * 1e6);
  const auto total = static_cast<unsigned __int128>(g.total_node_weight());
  const auto num = total * static_cast<unsigned __int128>(1000000 + eps_micro);
  const auto den = static_cast<unsigned __int128>(1000000) * k;
  BalanceSpec spec;
  spec.epsilon = epsilon;
  spec.k = k;
  spec.l_max = static_cast<NodeWeight>(num / den) + g.max_node_weight();
  return spec;
}

Partition Partition::from_assignment(const Graph &g,
                                     std::vector<BlockID> blocks, BlockID k) {
  Partition p;
  p.block_of = std::move(blocks);
  p.k = k;
  p.block_weight.assign(k, 0);
  for (NodeID v = 0; v < g.node_count(); ++v) {
    p.block_weight[p.block_of[v]] += g.node_weight(v);
  }
  p.cut = cut_weight(g, p.block_of);
  return p;
}

void Partition::move_node(const Graph &g, NodeID v, BlockID to) {
  const BlockID from = block_of[v];
  if (from == to) {
    return;
  }
  for (const Arc &a : g.arcs(v)) {
    const BlockID bt = block_of[a.target];
    if (bt == from) {
      cut += a.weight;
    } else if (bt == to) {
      cut -= a.weight;
    }
  }
  block_weight[from] -= g.node_weight(v);
  block_weight[to] += g.node_weight(v);
  block_of[v] = to;
}

bool Partition::consistent_with(const Graph &g) const {
  if (block_of.size() != g.node_count() ||
      block_weight.size() != static_cast<std::size_t>(k)) {
    return false;
  }
  std::vector<NodeWeight> w(k, 0);
  for (NodeID v = 0; v < g.node_count(); ++v) {
    if (block_of[v] < 0 || block_of[v] >= k) {
      return false;
    }
    w[block_of[v]] += g.node_weight(v);
  }
  return w == block_weight && cut == cut_weight(g, block_of);
}

EdgeWeight cut_weight(const Graph &g, std::span<const BlockID> block_of) {
  EdgeWeight cut = 0;
  for (const Edge &e : g.edges()) {
    if (block_of[e.u] != block_of[e.v]) {
      cut += e.weight;
    }
  }
  return cut;
}

NodeWeight imbalance(const Partition &p, const BalanceSpec &spec) {
  NodeWeight worst = 0;
  for (const NodeWeight w : p.block_weight) {
    worst = std::max(worst, w - spec.l_max);
  }
  return std::max<NodeWeight>(worst, 0);
}

Partition project_partition(const Graph &fine, const Partition &coarse,
                            std::span<const NodeID> coarse_map) {
  if (coarse_map.size() != fine.node_count()) {
    throw std::invalid_argument("coarse_map size does not match fine graph");
  }
  std::vector<BlockID> blocks(fine.node_count());
  for (NodeID v = 0; v < fine.node_count(); ++v) {
    blocks[v] = coarse.block_of[coarse_map[v]];
  }
  return Partition::from_assignment(fine, std::move(blocks), coarse.k);
}

} // namespace mgp
