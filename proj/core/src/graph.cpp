#include "mgp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mgp {

Graph Graph::with_coords(Coords coords) const {
  if (coords.size() != node_count()) {
    throw std::invalid_argument("coordinate count does not match node count");
  }
  Graph g = *this;
  g._coords = std::move(coords);
  return g;
}

Graph build_graph(NodeID n, std::span<const EdgeDef> edges,
                  std::span<const NodeWeight> node_weights, Coords coords) {
  if (!node_weights.empty() && node_weights.size() != n) {
    throw std::invalid_argument("node weight count does not match node count");
  }
  if (!coords.empty() && coords.size() != n) {
    throw std::invalid_argument("coordinate count does not match node count");
  }

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const EdgeDef &e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    }
    if (e.weight <= 0) {
      throw std::invalid_argument("nonpositive edge weight on (" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::sort(canon.begin(), canon.end(), [](const Edge &a, const Edge &b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  // Merge parallel edges by summing weights.
  std::vector<Edge> merged;
  merged.reserve(canon.size());
  for (const Edge &e : canon) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }

  Graph g;
  g._edges = std::move(merged);
  if (node_weights.empty()) {
    g._node_weight.assign(n, 1);
  } else {
    for (const NodeWeight w : node_weights) {
      if (w < 0) {
        throw std::invalid_argument("negative node weight");
      }
    }
    g._node_weight.assign(node_weights.begin(), node_weights.end());
  }
  g._coords = std::move(coords);

  std::vector<std::size_t> deg(n, 0);
  for (const Edge &e : g._edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g._offsets.assign(n + 1, 0);
  for (NodeID v = 0; v < n; ++v) {
    g._offsets[v + 1] = g._offsets[v] + deg[v];
  }
  g._arcs.resize(2 * g._edges.size());
  std::vector<std::size_t> fill(g._offsets.begin(), g._offsets.end() - 1);
  for (EdgeID id = 0; id < g._edges.size(); ++id) {
    const Edge &e = g._edges[id];
    g._arcs[fill[e.u]++] = {e.v, e.weight, id};
    g._arcs[fill[e.v]++] = {e.u, e.weight, id};
  }

  for (const NodeWeight w : g._node_weight) {
    g._total_node_weight += w;
    g._max_node_weight = std::max(g._max_node_weight, w);
  }
  for (const Edge &e : g._edges) {
    g._total_edge_weight += e.weight;
  }
  return g;
}

Subgraph induced_subgraph(const Graph &g, std::span<const NodeID> nodes) {
  std::vector<NodeID> to_sub(g.node_count(), kInvalidNode);
  for (NodeID i = 0; i < nodes.size(); ++i) {
    to_sub[nodes[i]] = i;
  }

  std::vector<EdgeDef> sub_edges;
  std::vector<EdgeID> parent_edge;
  std::vector<NodeWeight> weights(nodes.size());
  Coords coords;
  if (g.has_coords()) {
    coords.resize(nodes.size());
  }
  for (NodeID i = 0; i < nodes.size(); ++i) {
    const NodeID v = nodes[i];
    weights[i] = g.node_weight(v);
    if (g.has_coords()) {
      coords[i] = g.coords()[v];
    }
    for (const Arc &a : g.arcs(v)) {
      const NodeID t = to_sub[a.target];
      if (t != kInvalidNode && v < a.target) {
        sub_edges.push_back({i, t, a.weight});
        parent_edge.push_back(a.edge);
      }
    }
  }

  Subgraph out;
  out.graph = build_graph(static_cast<NodeID>(nodes.size()), sub_edges, weights,
                          std::move(coords));
  out.to_parent_node.assign(nodes.begin(), nodes.end());
  // nodes is ascending, so sub edges were emitted in (u, v) order already and
  // edge ids line up with the builder's canonical order.
  out.to_parent_edge = std::move(parent_edge);
  return out;
}

} // namespace mgp
