#include "mgp/fm.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "mgp/pqueue.hpp"
#include "mgp/seeds.hpp"

namespace mgp {

std::string_view queue_name(QueueStrategy q) {
  switch (q) {
  case QueueStrategy::TopGain:
    return "top_gain";
  case QueueStrategy::Alternate:
    return "alternate";
  case QueueStrategy::TopGainMaxLoad:
    return "top_gain_max_load";
  case QueueStrategy::MaxLoad:
    return "max_load";
  }
  return "top_gain";
}

std::optional<QueueStrategy> parse_queue(std::string_view name) {
  if (name == "top_gain") {
    return QueueStrategy::TopGain;
  }
  if (name == "alternate") {
    return QueueStrategy::Alternate;
  }
  if (name == "top_gain_max_load") {
    return QueueStrategy::TopGainMaxLoad;
  }
  if (name == "max_load") {
    return QueueStrategy::MaxLoad;
  }
  return std::nullopt;
}

NodeWeight pair_overflow(const Partition &p, BlockPair pair,
                         PairBounds bounds) {
  const NodeWeight over_a =
      std::max<NodeWeight>(0, p.block_weight[pair.a] - bounds.max_a);
  const NodeWeight over_b =
      std::max<NodeWeight>(0, p.block_weight[pair.b] - bounds.max_b);
  return std::max(over_a, over_b);
}

EdgeWeight move_gain(const Graph &g, const Partition &p, NodeID v,
                     BlockID to) {
  const BlockID own = p.block_of[v];
  EdgeWeight gain = 0;
  for (const Arc &arc : g.arcs(v)) {
    const BlockID bt = p.block_of[arc.target];
    if (bt == to) {
      gain += arc.weight;
    } else if (bt == own) {
      gain -= arc.weight;
    }
  }
  return gain;
}

Band extract_band(const Graph &g, const Partition &p, BlockPair pair,
                  int bfs_depth) {
  Band band;
  band.pair = pair;
  band.local.assign(g.n(), static_cast<std::uint32_t>(-1));
  auto in_pair = [&](NodeID v) {
    return p.block_of[v] == pair.a || p.block_of[v] == pair.b;
  };
  std::deque<NodeID> queue;
  for (NodeID v = 0; v < g.n(); ++v) {
    if (!in_pair(v)) {
      continue;
    }
    const BlockID other = p.block_of[v] == pair.a ? pair.b : pair.a;
    bool boundary = false;
    for (const Arc &arc : g.arcs(v)) {
      if (p.block_of[arc.target] == other) {
        boundary = true;
        break;
      }
    }
    if (boundary) {
      band.local[v] = static_cast<std::uint32_t>(band.nodes.size());
      band.nodes.push_back(v);
      band.depth.push_back(1);
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const NodeID v = queue.front();
    queue.pop_front();
    const int d = band.depth[band.local[v]];
    if (d >= bfs_depth) {
      continue;
    }
    for (const Arc &arc : g.arcs(v)) {
      const NodeID w = arc.target;
      if (!in_pair(w) || band.contains(w)) {
        continue;
      }
      band.local[w] = static_cast<std::uint32_t>(band.nodes.size());
      band.nodes.push_back(w);
      band.depth.push_back(d + 1);
      queue.push_back(w);
    }
  }
  band.frontier.assign(band.nodes.size(), 0);
  for (std::size_t i = 0; i < band.nodes.size(); ++i) {
    for (const Arc &arc : g.arcs(band.nodes[i])) {
      if (!band.contains(arc.target)) {
        band.frontier[i] = 1;
        break;
      }
    }
  }
  return band;
}

namespace {

// Queue side 0 holds candidates currently in pair.a, side 1 in pair.b.
struct SideState {
  AddressableMaxHeap heap;
  explicit SideState(std::size_t cap) : heap(cap) {}
};

} // namespace

MoveLog fm_pass(const Graph &g, const Band &band, Partition &p,
                PairBounds bounds, const RefineConfig &cfg,
                std::uint64_t seed) {
  const BlockPair pair = band.pair;
  MoveLog log;
  log.best_cut = p.cut;
  log.best_overflow = pair_overflow(p, pair, bounds);
  if (band.nodes.empty()) {
    return log;
  }
  Rng rng(seed_hash({seed, 0x666d70617373ULL}));

  std::size_t side_count[2] = {0, 0};
  for (NodeID v : band.nodes) {
    ++side_count[p.block_of[v] == pair.b ? 1 : 0];
  }
  const auto patience = static_cast<std::size_t>(std::max<long long>(
      1, static_cast<long long>(cfg.alpha_patience *
                                static_cast<double>(std::min(
                                    side_count[0], side_count[1])))));

  SideState side[2] = {SideState(band.nodes.size()),
                       SideState(band.nodes.size())};
  std::vector<char> moved(band.nodes.size(), 0);
  auto side_of = [&](NodeID v) { return p.block_of[v] == pair.b ? 1 : 0; };
  auto target_of = [&](NodeID v) {
    return p.block_of[v] == pair.a ? pair.b : pair.a;
  };
  auto activate = [&](NodeID v) {
    const std::uint32_t id = band.local[v];
    side[side_of(v)].heap.push(
        id, {move_gain(g, p, v, target_of(v)), rng()});
  };
  for (std::size_t i = 0; i < band.nodes.size(); ++i) {
    if (band.depth[i] == 1) {
      activate(band.nodes[i]);
    }
  }

  int last_side = 1; // Alternate starts with side 0
  auto pick_side = [&]() -> int {
    const bool has0 = !side[0].heap.empty();
    const bool has1 = !side[1].heap.empty();
    if (!has0 && !has1) {
      return -1;
    }
    if (has0 != has1) {
      return has0 ? 0 : 1;
    }
    if (cfg.queue == QueueStrategy::TopGain ||
        cfg.queue == QueueStrategy::TopGainMaxLoad) {
      // Overloaded sides are drained first regardless of gain.
      const bool over0 = p.block_weight[pair.a] > bounds.max_a;
      const bool over1 = p.block_weight[pair.b] > bounds.max_b;
      if (over0 != over1) {
        return over0 ? 0 : 1;
      }
      if (over0 && over1) {
        return p.block_weight[pair.a] >= p.block_weight[pair.b] ? 0 : 1;
      }
    }
    switch (cfg.queue) {
    case QueueStrategy::TopGain: {
      const auto g0 = side[0].heap.top_key().primary;
      const auto g1 = side[1].heap.top_key().primary;
      if (g0 != g1) {
        return g0 > g1 ? 0 : 1;
      }
      return rand_coin(rng) ? 0 : 1;
    }
    case QueueStrategy::TopGainMaxLoad: {
      const auto g0 = side[0].heap.top_key().primary;
      const auto g1 = side[1].heap.top_key().primary;
      if (g0 != g1) {
        return g0 > g1 ? 0 : 1;
      }
      if (p.block_weight[pair.a] != p.block_weight[pair.b]) {
        return p.block_weight[pair.a] > p.block_weight[pair.b] ? 0 : 1;
      }
      return rand_coin(rng) ? 0 : 1;
    }
    case QueueStrategy::Alternate:
      return 1 - last_side;
    case QueueStrategy::MaxLoad:
      if (p.block_weight[pair.a] != p.block_weight[pair.b]) {
        return p.block_weight[pair.a] > p.block_weight[pair.b] ? 0 : 1;
      }
      return rand_coin(rng) ? 0 : 1;
    }
    return 0;
  };

  for (;;) {
    const int s = pick_side();
    if (s < 0) {
      break;
    }
    last_side = s;
    const std::uint32_t id = side[s].heap.top();
    const EdgeWeight gain = side[s].heap.top_key().primary;
    side[s].heap.pop();
    const NodeID v = band.nodes[id];
    const BlockID from = p.block_of[v];
    const BlockID to = from == pair.a ? pair.b : pair.a;
    assert((from == pair.a) == (s == 0));
    moved[id] = 1;
    p.move_node(g, v, to);
    const NodeWeight overflow = pair_overflow(p, pair, bounds);
    log.moves.push_back({v, from, to, gain, overflow, p.cut});

    for (const Arc &arc : g.arcs(v)) {
      const NodeID w = arc.target;
      if (!band.contains(w)) {
        continue;
      }
      const std::uint32_t wid = band.local[w];
      if (moved[wid]) {
        continue;
      }
      const int ws = side_of(w);
      if (side[ws].heap.contains(wid)) {
        auto key = side[ws].heap.key_of(wid);
        // Neighbors on the source side gain, on the target side lose.
        key.primary += p.block_of[w] == from ? 2 * arc.weight
                                             : -2 * arc.weight;
        side[ws].heap.update(wid, key);
      } else {
        activate(w);
      }
    }

    if (overflow < log.best_overflow ||
        (overflow == log.best_overflow && p.cut < log.best_cut)) {
      log.best_prefix = log.moves.size();
      log.best_overflow = overflow;
      log.best_cut = p.cut;
    }
    if (log.moves.size() - log.best_prefix > patience) {
      break;
    }
  }

  for (std::size_t i = log.moves.size(); i > log.best_prefix; --i) {
    const Move &mv = log.moves[i - 1];
    p.move_node(g, mv.node, mv.from);
  }
  assert(p.cut == log.best_cut);
  return log;
}

PairResult refine_pair(const Graph &g, const Partition &p, BlockPair pair,
                       PairBounds bounds, const RefineConfig &cfg,
                       std::uint64_t seed_a, std::uint64_t seed_b) {
  const NodeWeight base_overflow = pair_overflow(p, pair, bounds);
  const EdgeWeight base_cut = p.cut;
  const Band band = extract_band(g, p, pair, cfg.bfs_depth);

  Partition pa = p;
  const MoveLog log_a = fm_pass(g, band, pa, bounds, cfg, seed_a);
  Partition pb = p;
  const MoveLog log_b = fm_pass(g, band, pb, bounds, cfg, seed_b);

  const bool b_wins = log_b.best_overflow < log_a.best_overflow ||
                      (log_b.best_overflow == log_a.best_overflow &&
                       log_b.best_cut < log_a.best_cut);
  const MoveLog &win = b_wins ? log_b : log_a;
  PairResult out;
  out.moves.assign(win.moves.begin(),
                   win.moves.begin() +
                       static_cast<std::ptrdiff_t>(win.best_prefix));
  out.delta_cut = win.best_cut - base_cut;
  out.delta_overflow = win.best_overflow - base_overflow;
  out.adopted_b = b_wins;
  return out;
}

PairResult refine_pair(const Graph &g, const Partition &p, BlockPair pair,
                       const BalanceSpec &spec, const RefineConfig &cfg,
                       std::uint64_t seed_a, std::uint64_t seed_b) {
  return refine_pair(g, p, pair, PairBounds{spec.l_max, spec.l_max}, cfg,
                     seed_a, seed_b);
}

void apply_moves(const Graph &g, Partition &p, std::span<const Move> moves) {
  for (const Move &mv : moves) {
    p.move_node(g, mv.node, mv.to);
  }
}

} // namespace mgp
