#include "mgp/matchers.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace mgp {

std::string_view matcher_name(MatcherKind kind) {
  switch (kind) {
  case MatcherKind::Shem:
    return "shem";
  case MatcherKind::Greedy:
    return "greedy";
  case MatcherKind::Gpa:
    return "gpa";
  }
  return "?";
}

std::optional<MatcherKind> parse_matcher(std::string_view name) {
  for (const MatcherKind kind :
       {MatcherKind::Shem, MatcherKind::Greedy, MatcherKind::Gpa}) {
    if (name == matcher_name(kind)) {
      return kind;
    }
  }
  return std::nullopt;
}

std::vector<RatedEdge> sorted_rated_edges(const Graph &g,
                                          std::span<const double> ratings) {
  std::vector<RatedEdge> list(g.edge_count());
  for (EdgeID e = 0; e < g.edge_count(); ++e) {
    list[e] = {e, ratings[e]};
  }
  std::sort(list.begin(), list.end(), [](const RatedEdge &a, const RatedEdge &b) {
    return a.rating != b.rating ? a.rating > b.rating : a.edge < b.edge;
  });
  return list;
}

Matching shem(const Graph &g, std::span<const double> ratings, Rng &rng) {
  const NodeID n = g.node_count();
  std::vector<NodeID> order(n);
  std::iota(order.begin(), order.end(), 0);
  // random permutation first, then a stable sort by degree: equal-degree
  // nodes keep the shuffled order
  for (NodeID i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rand_index(rng, i)]);
  }
  std::stable_sort(order.begin(), order.end(), [&](NodeID a, NodeID b) {
    return g.degree(a) < g.degree(b);
  });

  Matching m = Matching::empty(n);
  for (const NodeID v : order) {
    if (m.matched(v)) {
      continue;
    }
    EdgeID best = kInvalidEdge;
    for (const Arc &a : g.arcs(v)) {
      if (m.matched(a.target)) {
        continue;
      }
      if (best == kInvalidEdge || ratings[a.edge] > ratings[best] ||
          (ratings[a.edge] == ratings[best] && a.edge < best)) {
        best = a.edge;
      }
    }
    if (best != kInvalidEdge) {
      const Edge &e = g.edge(best);
      m.add(e.u, e.v, e.weight, ratings[best]);
    }
  }
  return m;
}

Matching greedy_matching(const Graph &g, std::span<const double> ratings) {
  Matching m = Matching::empty(g.node_count());
  for (const RatedEdge &re : sorted_rated_edges(g, ratings)) {
    const Edge &e = g.edge(re.edge);
    if (!m.matched(e.u) && !m.matched(e.v)) {
      m.add(e.u, e.v, e.weight, re.rating);
    }
  }
  return m;
}

PathCycleSet::PathCycleSet(NodeID n) : _adj(n), _parent(n), _comp_edges(n, 0) {
  std::iota(_parent.begin(), _parent.end(), 0);
}

NodeID PathCycleSet::find(NodeID v) const {
  while (_parent[v] != v) {
    _parent[v] = _parent[_parent[v]];
    v = _parent[v];
  }
  return v;
}

bool PathCycleSet::try_add(NodeID u, NodeID v, EdgeWeight weight,
                           double rating) {
  if (degree(u) >= 2 || degree(v) >= 2) {
    return false;
  }
  const NodeID ru = find(u);
  const NodeID rv = find(v);
  if (ru == rv) {
    // u, v are the two ends of one path; closing it yields a cycle of
    // (edge count + 1) edges, admitted only when that is even
    if (_comp_edges[ru] % 2 == 0) {
      return false;
    }
    _comp_edges[ru] += 1;
  } else {
    _parent[ru] = rv;
    _comp_edges[rv] += _comp_edges[ru] + 1;
  }
  const std::size_t id = _edges.size();
  _edges.push_back({u, v, weight, rating});
  _adj[u].push_back({v, id});
  _adj[v].push_back({u, id});
  return true;
}

std::vector<PathCycleSet::Component> PathCycleSet::components() const {
  const NodeID n = static_cast<NodeID>(_adj.size());
  std::vector<bool> visited(n, false);
  std::vector<Component> out;

  for (NodeID v = 0; v < n; ++v) {
    if (visited[v] || _adj[v].empty()) {
      continue;
    }
    // flood-fill the component to pick a deterministic start: the smallest
    // path endpoint, or the smallest node id if everything has degree 2
    std::vector<NodeID> stack{v};
    visited[v] = true;
    NodeID start = v;
    bool is_cycle = true;
    while (!stack.empty()) {
      const NodeID x = stack.back();
      stack.pop_back();
      if (degree(x) == 1 && (is_cycle || x < start)) {
        start = x;
        is_cycle = false;
      }
      for (const Slot &s : _adj[x]) {
        if (!visited[s.other]) {
          visited[s.other] = true;
          stack.push_back(s.other);
        }
      }
    }

    Component comp;
    comp.is_cycle = is_cycle;
    NodeID cur = start;
    std::size_t via = _edges.size();
    for (;;) {
      const Slot *next = nullptr;
      for (const Slot &s : _adj[cur]) {
        if (s.edge != via && (next == nullptr || s.edge < next->edge)) {
          next = &s;
        }
      }
      if (next == nullptr) {
        break; // far end of a path
      }
      comp.edges.push_back(_edges[next->edge]);
      via = next->edge;
      cur = next->other;
      if (cur == start) {
        break; // cycle closed
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

PathDpResult dp_path_matching(std::span<const double> weights) {
  PathDpResult res;
  const std::size_t n = weights.size();
  if (n == 0) {
    return res;
  }
  // value[i]: best over the first i edges; take[i]: edge i-1 chosen there
  std::vector<double> value(n + 1, 0.0);
  std::vector<bool> take(n + 1, false);
  for (std::size_t i = 1; i <= n; ++i) {
    const double with = (i >= 2 ? value[i - 2] : 0.0) + weights[i - 1];
    if (with >= value[i - 1]) {
      value[i] = with;
      take[i] = true;
    } else {
      value[i] = value[i - 1];
    }
  }
  res.value = value[n];
  for (std::size_t i = n; i > 0;) {
    if (take[i]) {
      res.selected.push_back(i - 1);
      i = (i >= 2) ? i - 2 : 0;
    } else {
      --i;
    }
  }
  std::reverse(res.selected.begin(), res.selected.end());
  return res;
}

namespace {

void adopt_path_solution(Matching &m,
                         const std::vector<PathCycleSet::StructEdge> &edges,
                         const PathDpResult &dp) {
  for (const std::size_t idx : dp.selected) {
    const auto &e = edges[idx];
    m.add(e.u, e.v, e.weight, e.rating);
  }
}

} // namespace

Matching gpa(const Graph &g, std::span<const double> ratings) {
  PathCycleSet set(g.node_count());
  for (const RatedEdge &re : sorted_rated_edges(g, ratings)) {
    const Edge &e = g.edge(re.edge);
    set.try_add(e.u, e.v, e.weight, re.rating);
  }

  Matching m = Matching::empty(g.node_count());
  for (const PathCycleSet::Component &comp : set.components()) {
    std::vector<double> w(comp.edges.size());
    for (std::size_t i = 0; i < comp.edges.size(); ++i) {
      w[i] = comp.edges[i].rating;
    }
    if (!comp.is_cycle) {
      adopt_path_solution(m, comp.edges, dp_path_matching(w));
    } else {
      // a cycle matching excludes at least one of the two edges at the walk
      // start; solve both path relaxations and keep the better
      const std::size_t L = w.size();
      const PathDpResult drop_last =
          dp_path_matching(std::span<const double>(w).subspan(0, L - 1));
      const PathDpResult drop_first =
          dp_path_matching(std::span<const double>(w).subspan(1, L - 1));
      if (drop_last.value >= drop_first.value) {
        adopt_path_solution(m, comp.edges, drop_last);
      } else {
        for (const std::size_t idx : drop_first.selected) {
          const auto &e = comp.edges[idx + 1];
          m.add(e.u, e.v, e.weight, e.rating);
        }
      }
    }
  }
  return m;
}

namespace {

struct BruteForceSolver {
  const Graph &g;
  std::span<const double> ratings;
  std::vector<bool> used;
  std::vector<EdgeID> current, best;
  double current_value = 0.0, best_value = 0.0;

  void search(NodeID v) {
    const NodeID n = g.node_count();
    while (v < n && used[v]) {
      ++v;
    }
    if (v == n) {
      if (current_value > best_value) {
        best_value = current_value;
        best = current;
      }
      return;
    }
    used[v] = true;
    search(v + 1); // leave v unmatched
    for (const Arc &a : g.arcs(v)) {
      if (used[a.target]) {
        continue;
      }
      used[a.target] = true;
      current.push_back(a.edge);
      current_value += ratings[a.edge];
      search(v + 1);
      current_value -= ratings[a.edge];
      current.pop_back();
      used[a.target] = false;
    }
    used[v] = false;
  }
};

} // namespace

MaxMatchingResult brute_force_max_matching(const Graph &g,
                                           std::span<const double> ratings) {
  if (g.node_count() > 25) {
    throw std::invalid_argument("brute force oracle limited to 25 nodes");
  }
  BruteForceSolver solver{g, ratings, std::vector<bool>(g.node_count(), false),
                          {}, {}};
  solver.search(0);

  MaxMatchingResult res;
  res.value = solver.best_value;
  res.matching = Matching::empty(g.node_count());
  for (const EdgeID e : solver.best) {
    const Edge &edge = g.edge(e);
    res.matching.add(edge.u, edge.v, edge.weight, ratings[e]);
  }
  return res;
}

Matching run_matcher(MatcherKind kind, const Graph &g,
                     std::span<const double> ratings, Rng &rng) {
  switch (kind) {
  case MatcherKind::Shem:
    return shem(g, ratings, rng);
  case MatcherKind::Greedy:
    return greedy_matching(g, ratings);
  case MatcherKind::Gpa:
    return gpa(g, ratings);
  }
  return Matching::empty(g.node_count());
}

} // namespace mgp
