#include "mgp/matching.hpp"

#include <algorithm>
#include <cassert>

namespace mgp {

void Matching::add(NodeID u, NodeID v, EdgeWeight weight, double rating) {
  assert(!matched(u) && !matched(v) && u != v);
  edges.push_back({u, v, weight, rating});
  mate[u] = v;
  mate[v] = u;
  rated_weight += rating;
  edge_weight += weight;
}

void Matching::dissolve_at(NodeID v) {
  if (!matched(v)) {
    return;
  }
  const NodeID partner = mate[v];
  mate[v] = kInvalidNode;
  mate[partner] = kInvalidNode;
  const auto it =
      std::find_if(edges.begin(), edges.end(), [&](const MatchedEdge &e) {
        return (e.u == v && e.v == partner) || (e.u == partner && e.v == v);
      });
  assert(it != edges.end());
  rated_weight -= it->rating;
  edge_weight -= it->weight;
  edges.erase(it);
}

bool is_valid_matching(const Graph &g, const Matching &m) {
  if (m.mate.size() != g.node_count()) {
    return false;
  }
  std::vector<NodeID> seen(g.node_count(), kInvalidNode);
  for (const MatchedEdge &e : m.edges) {
    if (e.u == e.v || e.u >= g.node_count() || e.v >= g.node_count()) {
      return false;
    }
    if (seen[e.u] != kInvalidNode || seen[e.v] != kInvalidNode) {
      return false;
    }
    seen[e.u] = e.v;
    seen[e.v] = e.u;
    bool found = false;
    for (const Arc &a : g.arcs(e.u)) {
      if (a.target == e.v && a.weight == e.weight) {
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  for (NodeID v = 0; v < g.node_count(); ++v) {
    if (m.mate[v] != seen[v]) {
      return false;
    }
  }
  return true;
}

} // namespace mgp
