#include "mgp/runtime.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mgp/parallel.hpp"
#include "mgp/quotient.hpp"
#include "mgp/rcb.hpp"
#include "mgp/seeds.hpp"

namespace mgp {

std::string_view stop_rule_name(StopRule rule) {
  switch (rule) {
  case StopRule::Once:
    return "once";
  case StopRule::NoChange:
    return "no_change";
  case StopRule::TwoNoChange:
    return "two_no_change";
  }
  return "no_change";
}

std::optional<StopRule> parse_stop_rule(std::string_view name) {
  if (name == "once") {
    return StopRule::Once;
  }
  if (name == "no_change") {
    return StopRule::NoChange;
  }
  if (name == "two_no_change") {
    return StopRule::TwoNoChange;
  }
  return std::nullopt;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t level,
                          std::uint64_t global_iter, std::uint64_t color,
                          std::uint64_t pair, std::uint64_t leg) {
  return seed_hash({master, level, global_iter, color, pair, leg});
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

/// Global refinement iterations of one level. Every iteration recolors the
/// current quotient graph and walks its color classes; all pairs of a class
/// refine against the iteration-round snapshot and their move lists are
/// applied in ascending quotient-edge order.
LevelStats refine_level(const Graph &g, Partition &p, const BalanceSpec &spec,
                        const RunConfig &cfg, std::uint64_t level_id,
                        std::size_t &pair_refinements) {
  LevelStats stats;
  stats.nodes = g.n();
  stats.edges = g.m();
  stats.cut_before = p.cut;
  stats.imbalance_before = imbalance(p, spec);

  int unchanged_streak = 0;
  for (int iter = 0; iter < cfg.max_global_iterations; ++iter) {
    const NodeWeight imb_before = imbalance(p, spec);
    const EdgeWeight cut_before = p.cut;

    const QuotientGraph q = build_quotient(g, p);
    if (q.edges.empty()) {
      ++stats.iterations;
      break;
    }
    const EdgeColoring coloring = color_edges(
        q, seed_hash({cfg.master_seed, 0x71636f6cULL, level_id,
                      static_cast<std::uint64_t>(iter)}));
    const auto rounds = schedule_rounds(q, coloring);
    const int local_iters = std::max(1, cfg.refine.local_iterations);
    for (const std::vector<std::size_t> &round : rounds) {
      const Partition snapshot = p;
      std::vector<std::vector<Move>> results(round.size());
      parallel_for(round.size(), cfg.workers, [&](std::size_t i) {
        const std::size_t edge_index = round[i];
        const BlockPair pair{q.edges[edge_index].a, q.edges[edge_index].b};
        Partition local = snapshot;
        std::vector<Move> all;
        for (int li = 0; li < local_iters; ++li) {
          const auto leg = static_cast<std::uint64_t>(li) * 2;
          const std::uint64_t seed_a = derive_seed(
              cfg.master_seed, level_id, static_cast<std::uint64_t>(iter),
              static_cast<std::uint64_t>(coloring.color[edge_index]),
              static_cast<std::uint64_t>(edge_index), leg);
          const std::uint64_t seed_b = derive_seed(
              cfg.master_seed, level_id, static_cast<std::uint64_t>(iter),
              static_cast<std::uint64_t>(coloring.color[edge_index]),
              static_cast<std::uint64_t>(edge_index), leg + 1);
          const PairResult r =
              refine_pair(g, local, pair, spec, cfg.refine, seed_a, seed_b);
          apply_moves(g, local, r.moves);
          all.insert(all.end(), r.moves.begin(), r.moves.end());
        }
        results[i] = std::move(all);
      });
      for (std::size_t i = 0; i < round.size(); ++i) {
        apply_moves(g, p, results[i]);
      }
      pair_refinements += round.size() * static_cast<std::size_t>(local_iters);
    }
    ++stats.iterations;

    if (cfg.stop_rule == StopRule::Once) {
      break;
    }
    const bool unchanged =
        imbalance(p, spec) == imb_before && p.cut == cut_before;
    unchanged_streak = unchanged ? unchanged_streak + 1 : 0;
    if (cfg.stop_rule == StopRule::NoChange && unchanged_streak >= 1) {
      break;
    }
    if (cfg.stop_rule == StopRule::TwoNoChange && unchanged_streak >= 2) {
      break;
    }
  }

  stats.cut_after = p.cut;
  stats.imbalance_after = imbalance(p, spec);
  return stats;
}

} // namespace

RunResult run_multilevel(const Graph &g, const RunConfig &cfg) {
  if (cfg.k < 1) {
    throw std::invalid_argument("run_multilevel: k must be positive");
  }
  if (static_cast<NodeID>(cfg.k) > g.n()) {
    throw std::invalid_argument(
        "run_multilevel: k exceeds the number of nodes");
  }
  const auto t_start = std::chrono::steady_clock::now();
  RunResult out;
  out.stats.master_seed = cfg.master_seed;
  out.stats.spec = make_balance_spec(g, cfg.k, cfg.epsilon);

  if (cfg.k == 1) {
    out.partition =
        Partition::from_assignment(g, std::vector<BlockID>(g.n(), 0), 1);
    out.stats.cut = 0;
    out.stats.imbalance = imbalance(out.partition, out.stats.spec);
    out.stats.balanced = out.stats.imbalance == 0;
    out.stats.seconds_total = seconds_since(t_start);
    return out;
  }

  const auto t_coarsen = std::chrono::steady_clock::now();
  const BlockAssignment prepart = make_prepartition(g, cfg.prepart_blocks);
  const Hierarchy hierarchy =
      coarsen_until(g, cfg.k, cfg.coarsen, prepart,
                    seed_hash({cfg.master_seed, 0x636f617273ULL}),
                    cfg.workers);
  out.stats.seconds_coarsen = seconds_since(t_coarsen);

  const auto t_init = std::chrono::steady_clock::now();
  InitResult init =
      initial_partition(hierarchy.coarsest(), out.stats.spec, cfg.init,
                        cfg.refine, seed_hash({cfg.master_seed, 0x696e6974ULL}));
  Partition p = std::move(init.partition);
  out.stats.seconds_initial = seconds_since(t_init);

  const auto t_refine = std::chrono::steady_clock::now();
  out.stats.levels.push_back(refine_level(hierarchy.coarsest(), p,
                                          out.stats.spec, cfg,
                                          hierarchy.level_count(),
                                          out.stats.pair_refinements));
  for (std::size_t li = hierarchy.level_count(); li > 0; --li) {
    const HierarchyLevel &level = hierarchy.levels[li - 1];
    p = project_partition(level.graph, p, level.coarse_map);
    out.stats.levels.push_back(refine_level(level.graph, p, out.stats.spec,
                                            cfg, li - 1,
                                            out.stats.pair_refinements));
  }
  out.stats.seconds_refine = seconds_since(t_refine);

  out.partition = std::move(p);
  out.stats.cut = out.partition.cut;
  out.stats.imbalance = imbalance(out.partition, out.stats.spec);
  out.stats.balanced = out.stats.imbalance == 0;
  out.stats.seconds_total = seconds_since(t_start);
  return out;
}

} // namespace mgp
