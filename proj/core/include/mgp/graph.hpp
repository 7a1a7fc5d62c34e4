#pragma once

#include <array>
#include <span>
#include <vector>

#include "mgp/types.hpp"

namespace mgp {

/// One undirected edge as supplied to the builder.
struct EdgeDef {
  NodeID u;
  NodeID v;
  EdgeWeight weight;
};

/// A directed slot of the forward-star array.
struct Arc {
  NodeID target;
  EdgeWeight weight;
  EdgeID edge; // id of the underlying undirected edge
};

/// Canonical undirected edge, u < v, ids dense in (u, v) order.
struct Edge {
  NodeID u;
  NodeID v;
  EdgeWeight weight;
};

using Coords = std::vector<std::array<double, 2>>;

// Weighted undirected graph in forward-star form. Immutable after
// construction; every undirected edge appears as two arcs with equal weight.
// No self-loops, no parallel edges (merged by the builder), all edge weights
// positive, all node weights nonnegative.
class Graph {
public:
  Graph() = default;

  NodeID node_count() const { return static_cast<NodeID>(_node_weight.size()); }
  EdgeID edge_count() const { return static_cast<EdgeID>(_edges.size()); }

  // Conventional shorthands.
  NodeID n() const { return node_count(); }
  EdgeID m() const { return edge_count(); }

  NodeID degree(NodeID v) const {
    return static_cast<NodeID>(_offsets[v + 1] - _offsets[v]);
  }

  std::span<const Arc> arcs(NodeID v) const {
    return {_arcs.data() + _offsets[v], _offsets[v + 1] - _offsets[v]};
  }

  const Edge &edge(EdgeID e) const { return _edges[e]; }
  const std::vector<Edge> &edges() const { return _edges; }

  NodeWeight node_weight(NodeID v) const { return _node_weight[v]; }
  const std::vector<NodeWeight> &node_weights() const { return _node_weight; }

  NodeWeight total_node_weight() const { return _total_node_weight; }
  NodeWeight max_node_weight() const { return _max_node_weight; }
  EdgeWeight total_edge_weight() const { return _total_edge_weight; }

  bool has_coords() const { return !_coords.empty(); }
  const Coords &coords() const { return _coords; }

  /// Copy of this graph with coordinates attached (size must equal n).
  Graph with_coords(Coords coords) const;

  friend Graph build_graph(NodeID n, std::span<const EdgeDef> edges,
                           std::span<const NodeWeight> node_weights,
                           Coords coords);

private:
  std::vector<std::size_t> _offsets; // n + 1
  std::vector<Arc> _arcs;            // 2m
  std::vector<Edge> _edges;          // m, sorted by (u, v)
  std::vector<NodeWeight> _node_weight;
  Coords _coords;
  NodeWeight _total_node_weight = 0;
  NodeWeight _max_node_weight = 0;
  EdgeWeight _total_edge_weight = 0;
};

/// Builds a graph from an edge list. Parallel edges are merged by summing
/// their weights. Throws std::invalid_argument on self-loops, out-of-range
/// endpoints, nonpositive edge weights or negative node weights. Node weights
/// default to 1 when omitted.
Graph build_graph(NodeID n, std::span<const EdgeDef> edges,
                  std::span<const NodeWeight> node_weights = {},
                  Coords coords = {});

/// Subgraph induced by a node set, with maps back to the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<NodeID> to_parent_node; // sub id -> parent id
  std::vector<EdgeID> to_parent_edge; // sub edge id -> parent edge id
};

/// Nodes must be sorted ascending and duplicate-free.
Subgraph induced_subgraph(const Graph &g, std::span<const NodeID> nodes);

} // namespace mgp
