#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mgp/graph.hpp"
#include "mgp/matching.hpp"
#include "mgp/seeds.hpp"
#include "mgp/types.hpp"

namespace mgp {

enum class MatcherKind { Shem, Greedy, Gpa };

std::string_view matcher_name(MatcherKind kind);
std::optional<MatcherKind> parse_matcher(std::string_view name);

struct RatedEdge {
  EdgeID edge;
  double rating;
};

/// Edge ids sorted by (rating desc, edge id asc), the scan order shared by
/// Greedy and GPA.
std::vector<RatedEdge> sorted_rated_edges(const Graph &g,
                                          std::span<const double> ratings);

/// Sorted Heavy Edge Matching: nodes visited in (degree asc, random
/// tie-break) order; each unmatched node grabs its best-rated edge to an
/// unmatched neighbor.
Matching shem(const Graph &g, std::span<const double> ratings, Rng &rng);

/// Scans edges by descending rating, accepting an edge iff both endpoints are
/// still free.
Matching greedy_matching(const Graph &g, std::span<const double> ratings);

// Node-disjoint collection of simple paths and even cycles, grown by the GPA
// edge scan. An edge is admitted iff both endpoints have degree <= 1 in the
// structure and it either joins two components or closes a path into an
// even-edge-count cycle.
class PathCycleSet {
public:
  explicit PathCycleSet(NodeID n);

  /// Admits {u, v} if the rules allow; returns whether it was taken.
  bool try_add(NodeID u, NodeID v, EdgeWeight weight, double rating);

  int degree(NodeID v) const { return static_cast<int>(_adj[v].size()); }

  struct StructEdge {
    NodeID u;
    NodeID v;
    EdgeWeight weight;
    double rating;
  };
  struct Component {
    std::vector<StructEdge> edges; // in walk order along the path / cycle
    bool is_cycle = false;
  };

  /// Decomposes into components; deterministic walk order (each starts at its
  /// smallest node id).
  std::vector<Component> components() const;

private:
  struct Slot {
    NodeID other;
    std::size_t edge;
  };
  NodeID find(NodeID v) const;

  std::vector<StructEdge> _edges;
  std::vector<std::vector<Slot>> _adj; // at most 2 slots per node
  mutable std::vector<NodeID> _parent; // union-find
  std::vector<std::size_t> _comp_edges;
};

/// Global Path Algorithm: builds a PathCycleSet from the sorted edge scan,
/// then solves each path / even cycle optimally by dynamic programming.
Matching gpa(const Graph &g, std::span<const double> ratings);

struct PathDpResult {
  double value = 0.0;
  std::vector<std::size_t> selected; // indices of chosen edges along the path
};

/// Maximum-weight matching of a path whose consecutive edge weights are
/// given: M(i) = max(M(i-1), M(i-2) + w_i). Ties prefer taking the edge.
PathDpResult dp_path_matching(std::span<const double> weights);

struct MaxMatchingResult {
  double value = 0.0;
  Matching matching;
};

/// Exhaustive maximum-rating matching; test oracle for small instances
/// (throws beyond 25 nodes).
MaxMatchingResult brute_force_max_matching(const Graph &g,
                                           std::span<const double> ratings);

/// Dispatch by kind; rng is only consumed by SHEM.
Matching run_matcher(MatcherKind kind, const Graph &g,
                     std::span<const double> ratings, Rng &rng);

} // namespace mgp
