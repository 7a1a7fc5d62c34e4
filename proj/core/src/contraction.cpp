#include "mgp/contraction.hpp"

#include <stdexcept>

namespace mgp {

ContractionResult contract_matching(const Graph &g, const Matching &m) {
  if (!is_valid_matching(g, m)) {
    throw std::invalid_argument("invalid matching for contraction");
  }
  const NodeID n = g.node_count();

  std::vector<NodeID> coarse_map(n, kInvalidNode);
  NodeID coarse_n = 0;
  for (NodeID v = 0; v < n; ++v) {
    if (coarse_map[v] != kInvalidNode) {
      continue; // second endpoint of an already numbered pair
    }
    coarse_map[v] = coarse_n;
    if (m.matched(v)) {
      coarse_map[m.mate[v]] = coarse_n;
    }
    ++coarse_n;
  }

  std::vector<NodeWeight> weights(coarse_n, 0);
  Coords coords;
  std::vector<NodeWeight> coord_mass;
  if (g.has_coords()) {
    coords.assign(coarse_n, {0.0, 0.0});
    coord_mass.assign(coarse_n, 0);
  }
  for (NodeID v = 0; v < n; ++v) {
    const NodeID x = coarse_map[v];
    weights[x] += g.node_weight(v);
    if (g.has_coords()) {
      // weighted average; mass tracked separately so zero-weight nodes still
      // average plainly
      const NodeWeight mass = std::max<NodeWeight>(g.node_weight(v), 1);
      coords[x][0] += static_cast<double>(mass) * g.coords()[v][0];
      coords[x][1] += static_cast<double>(mass) * g.coords()[v][1];
      coord_mass[x] += mass;
    }
  }
  if (g.has_coords()) {
    for (NodeID x = 0; x < coarse_n; ++x) {
      coords[x][0] /= static_cast<double>(coord_mass[x]);
      coords[x][1] /= static_cast<double>(coord_mass[x]);
    }
  }

  std::vector<EdgeDef> coarse_edges;
  coarse_edges.reserve(g.edge_count());
  for (const Edge &e : g.edges()) {
    const NodeID cu = coarse_map[e.u];
    const NodeID cv = coarse_map[e.v];
    if (cu != cv) {
      coarse_edges.push_back({cu, cv, e.weight});
    }
  }

  ContractionResult res;
  res.graph = build_graph(coarse_n, coarse_edges, weights, std::move(coords));
  res.coarse_map = std::move(coarse_map);
  return res;
}

} // namespace mgp
