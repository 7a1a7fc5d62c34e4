#pragma once

// Shared graph fixtures for the test suites.

#include <span>
#include <vector>

#include "mgp/graph.hpp"
#include "mgp/partition.hpp"
#include "mgp/seeds.hpp"

namespace mgp::test {

/// Triangle with edge weights 1, 2, 3; the running example of the docs.
inline Graph triangle() {
  const std::vector<EdgeDef> edges = {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}};
  return build_graph(3, edges);
}

/// Path 0-1-..-n with the given consecutive edge weights.
inline Graph path_graph(std::span<const EdgeWeight> weights) {
  std::vector<EdgeDef> edges;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    edges.push_back({static_cast<NodeID>(i), static_cast<NodeID>(i + 1),
                     weights[i]});
  }
  return build_graph(static_cast<NodeID>(weights.size() + 1), edges);
}

inline Graph unit_path(NodeID n) {
  const std::vector<EdgeWeight> weights(n - 1, 1);
  return path_graph(weights);
}

inline Graph cycle_graph(NodeID n, EdgeWeight weight = 1) {
  std::vector<EdgeDef> edges;
  for (NodeID v = 0; v < n; ++v) {
    edges.push_back({v, static_cast<NodeID>((v + 1) % n), weight});
  }
  return build_graph(n, edges);
}

inline Graph clique(NodeID n, EdgeWeight weight = 1) {
  std::vector<EdgeDef> edges;
  for (NodeID u = 0; u < n; ++u) {
    for (NodeID v = u + 1; v < n; ++v) {
      edges.push_back({u, v, weight});
    }
  }
  return build_graph(n, edges);
}

/// Erdos-Renyi style graph with random integer edge weights in [1, max_w].
inline Graph random_graph(Rng &rng, NodeID n, double edge_prob,
                          EdgeWeight max_weight = 9,
                          NodeWeight max_node_weight = 1) {
  std::vector<EdgeDef> edges;
  for (NodeID u = 0; u < n; ++u) {
    for (NodeID v = u + 1; v < n; ++v) {
      if (rand_unit(rng) < edge_prob) {
        edges.push_back({u, v,
                         1 + static_cast<EdgeWeight>(rand_index(
                                 rng, static_cast<std::uint64_t>(max_weight)))});
      }
    }
  }
  std::vector<NodeWeight> weights;
  if (max_node_weight > 1) {
    for (NodeID v = 0; v < n; ++v) {
      weights.push_back(1 + static_cast<NodeWeight>(rand_index(
                                rng,
                                static_cast<std::uint64_t>(max_node_weight))));
    }
  }
  return build_graph(n, edges, weights);
}

inline Partition random_partition(Rng &rng, const Graph &g, BlockID k) {
  std::vector<BlockID> blocks(g.n());
  for (NodeID v = 0; v < g.n(); ++v) {
    blocks[v] = static_cast<BlockID>(
        rand_index(rng, static_cast<std::uint64_t>(k)));
  }
  return Partition::from_assignment(g, std::move(blocks), k);
}

} // namespace mgp::test
