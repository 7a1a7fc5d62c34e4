#pragma once

#include <vector>

#include "mgp/graph.hpp"
#include "mgp/types.hpp"

namespace mgp {

struct MatchedEdge {
  NodeID u;
  NodeID v;
  EdgeWeight weight;
  double rating;
};

// A set of vertex-disjoint edges. mate is the symmetric closure of edges;
// unmatched nodes carry kInvalidNode.
struct Matching {
  std::vector<MatchedEdge> edges;
  std::vector<NodeID> mate;
  double rated_weight = 0.0;
  EdgeWeight edge_weight = 0;

  static Matching empty(NodeID n) {
    Matching m;
    m.mate.assign(n, kInvalidNode);
    return m;
  }

  bool matched(NodeID v) const { return mate[v] != kInvalidNode; }

  /// Adds {u, v}; both endpoints must currently be unmatched.
  void add(NodeID u, NodeID v, EdgeWeight weight, double rating);

  /// Removes the matched edge at v, if any.
  void dissolve_at(NodeID v);
};

/// Checks vertex-disjointness, mate symmetry, and that every matched edge
/// exists in g with the recorded weight.
bool is_valid_matching(const Graph &g, const Matching &m);

} // namespace mgp
