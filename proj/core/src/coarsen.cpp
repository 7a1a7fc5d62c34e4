#include "mgp/coarsen.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mgp/parallel.hpp"
#include "mgp/rcb.hpp"
#include "mgp/seeds.hpp"

namespace mgp {

Matching locally_heaviest_matching(const Graph &g,
                                   std::span<const double> ratings,
                                   std::span<const EdgeID> edges) {
  Matching m = Matching::empty(g.n());
  std::vector<EdgeID> alive(edges.begin(), edges.end());
  auto better = [&](EdgeID a, EdgeID b) {
    if (ratings[a] != ratings[b]) {
      return ratings[a] > ratings[b];
    }
    return a < b;
  };
  std::vector<EdgeID> best_at(g.n(), kInvalidEdge);
  while (!alive.empty()) {
    std::vector<NodeID> touched;
    touched.reserve(alive.size() * 2);
    for (EdgeID e : alive) {
      for (NodeID v : {g.edge(e).u, g.edge(e).v}) {
        if (best_at[v] == kInvalidEdge) {
          best_at[v] = e;
          touched.push_back(v);
        } else if (better(e, best_at[v])) {
          best_at[v] = e;
        }
      }
    }
    std::size_t accepted = 0;
    for (EdgeID e : alive) {
      if (best_at[g.edge(e).u] == e && best_at[g.edge(e).v] == e) {
        const Edge &ed = g.edge(e);
        m.add(ed.u, ed.v, ed.weight, ratings[e]);
        ++accepted;
      }
    }
    for (NodeID v : touched) {
      best_at[v] = kInvalidEdge;
    }
    if (accepted == 0) {
      break; // unreachable with a strict total order, kept as a guard
    }
    std::vector<EdgeID> next;
    next.reserve(alive.size());
    for (EdgeID e : alive) {
      if (!m.matched(g.edge(e).u) && !m.matched(g.edge(e).v)) {
        next.push_back(e);
      }
    }
    alive.swap(next);
  }
  return m;
}

std::vector<EdgeID> gap_graph(const Graph &g, std::span<const double> ratings,
                              const BlockAssignment &prepart,
                              const Matching &local) {
  std::vector<double> matched_rating(g.n(), 0.0);
  std::vector<char> is_matched(g.n(), 0);
  for (const MatchedEdge &me : local.edges) {
    matched_rating[me.u] = me.rating;
    matched_rating[me.v] = me.rating;
    is_matched[me.u] = 1;
    is_matched[me.v] = 1;
  }
  std::vector<EdgeID> out;
  for (EdgeID e = 0; e < g.m(); ++e) {
    const Edge &ed = g.edge(e);
    if (prepart.block_of[ed.u] == prepart.block_of[ed.v]) {
      continue;
    }
    const bool beats_u = !is_matched[ed.u] || ratings[e] > matched_rating[ed.u];
    const bool beats_v = !is_matched[ed.v] || ratings[e] > matched_rating[ed.v];
    if (beats_u && beats_v) {
      out.push_back(e);
    }
  }
  return out;
}

namespace {

/// Block-local matching of the induced subgraphs, translated back to parent
/// node ids. A single block skips extraction, so the result then equals the
/// sequential matcher on g with the block-0 seed.
Matching block_local_matching(const Graph &g, std::span<const double> ratings,
                              const BlockAssignment &prepart,
                              const CoarsenConfig &cfg, std::uint64_t seed,
                              unsigned workers) {
  if (prepart.num_blocks <= 1) {
    Rng rng(seed_hash({seed, 0x626c6f636bULL, 0}));
    return run_matcher(cfg.matcher, g, ratings, rng);
  }
  std::vector<std::vector<NodeID>> members(
      static_cast<std::size_t>(prepart.num_blocks));
  for (NodeID v = 0; v < g.n(); ++v) {
    members[static_cast<std::size_t>(prepart.block_of[v])].push_back(v);
  }
  std::vector<Matching> partial(members.size());
  parallel_for(members.size(), workers, [&](std::size_t b) {
    if (members[b].size() < 2) {
      partial[b] = Matching::empty(0);
      return;
    }
    const Subgraph sub = induced_subgraph(g, members[b]);
    std::vector<double> sub_ratings(sub.graph.m());
    for (EdgeID e = 0; e < sub.graph.m(); ++e) {
      sub_ratings[e] = ratings[sub.to_parent_edge[e]];
    }
    Rng rng(seed_hash({seed, 0x626c6f636bULL, b}));
    Matching sm = run_matcher(cfg.matcher, sub.graph, sub_ratings, rng);
    Matching lifted = Matching::empty(g.n());
    for (const MatchedEdge &me : sm.edges) {
      lifted.add(sub.to_parent_node[me.u], sub.to_parent_node[me.v], me.weight,
                 me.rating);
    }
    partial[b] = std::move(lifted);
  });
  Matching merged = Matching::empty(g.n());
  for (const Matching &pm : partial) {
    for (const MatchedEdge &me : pm.edges) {
      merged.add(me.u, me.v, me.weight, me.rating);
    }
  }
  return merged;
}

} // namespace

Matching parallel_match_round(const Graph &g, std::span<const double> ratings,
                              const BlockAssignment &prepart,
                              const CoarsenConfig &cfg, std::uint64_t seed,
                              unsigned workers) {
  Matching local =
      block_local_matching(g, ratings, prepart, cfg, seed, workers);
  if (prepart.num_blocks <= 1) {
    return local;
  }
  const std::vector<EdgeID> gap = gap_graph(g, ratings, prepart, local);
  const Matching cross = locally_heaviest_matching(g, ratings, gap);
  for (const MatchedEdge &me : cross.edges) {
    local.dissolve_at(me.u);
    local.dissolve_at(me.v);
  }
  for (const MatchedEdge &me : cross.edges) {
    local.add(me.u, me.v, me.weight, me.rating);
  }
  return local;
}

NodeID coarsening_threshold(NodeID n, BlockID k, const CoarsenConfig &cfg) {
  const double per_block =
      static_cast<double>(n) / (cfg.alpha_contraction *
                                static_cast<double>(k) *
                                static_cast<double>(k));
  const double blocks_floor = std::max<double>(
      static_cast<double>(cfg.min_coarse_per_block), per_block);
  return static_cast<NodeID>(static_cast<double>(k) * blocks_floor);
}

Hierarchy coarsen_until(const Graph &g, BlockID k, const CoarsenConfig &cfg,
                        const BlockAssignment &prepart, std::uint64_t seed,
                        unsigned workers) {
  if (k < 1) {
    throw std::invalid_argument("coarsen_until: k must be positive");
  }
  Hierarchy h;
  h.coarsest_graph = g;
  const NodeID threshold = coarsening_threshold(g.n(), k, cfg);
  BlockAssignment level_prepart = prepart;
  while (h.levels.size() < cfg.max_levels &&
         h.coarsest_graph.n() > threshold) {
    const Graph &cur = h.coarsest_graph;
    const std::vector<double> ratings = rate_all(cur, cfg.rating);
    const std::uint64_t level_seed =
        seed_hash({seed, 0x636f617273656eULL, h.levels.size()});
    Matching m = parallel_match_round(cur, ratings, level_prepart, cfg,
                                      level_seed, workers);
    if (m.edges.empty()) {
      break;
    }
    const NodeID before = cur.n();
    ContractionResult c = contract_matching(cur, m);
    if (static_cast<double>(before - c.graph.n()) <
        cfg.stall_fraction * static_cast<double>(before)) {
      break;
    }
    HierarchyLevel level;
    level.graph = std::move(h.coarsest_graph);
    level.matching = std::move(m);
    level.coarse_map = std::move(c.coarse_map);
    h.levels.push_back(std::move(level));
    h.coarsest_graph = std::move(c.graph);
    level_prepart = make_prepartition(h.coarsest_graph, prepart.num_blocks);
  }
  return h;
}

} // namespace mgp
