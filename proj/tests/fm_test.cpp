#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "common.hpp"
#include "mgp/fm.hpp"
#include "mgp/pqueue.hpp"
#include "mgp/quotient.hpp"

using namespace mgp;

namespace {

Partition assign(const Graph &g, std::vector<BlockID> blocks, BlockID k) {
  return Partition::from_assignment(g, std::move(blocks), k);
}

/// Path 0-1-2-3 with a heavy cross edge; blocks 3:1 around pair (0, 1).
struct LopsidedFixture {
  Graph g;
  Partition p;
  BlockPair pair{0, 1};

  LopsidedFixture() {
    const std::vector<EdgeWeight> weights = {1, 1, 5};
    g = test::path_graph(weights);
    p = assign(g, {0, 0, 0, 1}, 2);
  }
};

} // namespace

TEST_CASE("the addressable heap pops the largest key first") {
  AddressableMaxHeap heap(8);
  heap.push(0, {5, 1});
  heap.push(1, {5, 9});
  heap.push(2, {3, 100});
  CHECK(heap.size() == 3);
  CHECK(heap.top() == 1); // ties break by the second component
  heap.pop();
  CHECK(heap.top() == 0);
  heap.pop();
  CHECK(heap.top() == 2);
  heap.pop();
  CHECK(heap.empty());
}

TEST_CASE("heap updates reposition entries in both directions") {
  AddressableMaxHeap heap(8);
  heap.push(0, {1, 0});
  heap.push(1, {2, 0});
  heap.push(2, {3, 0});
  heap.update(0, {10, 0});
  CHECK(heap.top() == 0);
  heap.update(0, {0, 0});
  CHECK(heap.top() == 2);
  heap.remove(1);
  CHECK(!heap.contains(1));
  CHECK(heap.size() == 2);
  heap.push_or_update(1, {99, 0});
  CHECK(heap.top() == 1);
  CHECK(heap.key_of(2).primary == 3);
}

TEST_CASE("pair overflow is the worse of the two block overshoots") {
  const Graph g = test::unit_path(4);
  const Partition p = assign(g, {0, 0, 0, 1}, 2); // weights 3 and 1
  CHECK(pair_overflow(p, {0, 1}, {2, 2}) == 1);
  CHECK(pair_overflow(p, {0, 1}, {3, 3}) == 0);
  CHECK(pair_overflow(p, {0, 1}, {1, 0}) == 2);
}

TEST_CASE("move gain counts edges toward the target minus the own block") {
  const Graph g = test::cycle_graph(4);
  const Partition p = assign(g, {0, 0, 1, 1}, 2);
  CHECK(move_gain(g, p, 1, 1) == 0);  // leaves 0, joins 2
  CHECK(move_gain(g, p, 0, 1) == 0);
  const std::vector<EdgeWeight> weights = {1, 5};
  const Graph h = test::path_graph(weights);
  const Partition q = assign(h, {0, 0, 1}, 2);
  CHECK(move_gain(h, q, 1, 1) == 4);  // +5 across, -1 internal
  CHECK(move_gain(h, q, 2, 0) == 5);
}

TEST_CASE("the band grows from the pair boundary layer by layer") {
  const Graph g = test::unit_path(4);
  const Partition p = assign(g, {0, 0, 1, 1}, 2);

  const Band depth1 = extract_band(g, p, {0, 1}, 1);
  REQUIRE(depth1.nodes.size() == 2);
  CHECK(depth1.contains(1));
  CHECK(depth1.contains(2));
  CHECK(!depth1.contains(0));
  CHECK(depth1.depth == std::vector<int>{1, 1});
  // Both band nodes still touch nodes outside the band.
  CHECK(depth1.frontier == std::vector<char>{1, 1});

  const Band depth2 = extract_band(g, p, {0, 1}, 2);
  REQUIRE(depth2.nodes.size() == 4);
  CHECK(depth2.depth[depth2.local[0]] == 2);
  CHECK(depth2.depth[depth2.local[1]] == 1);
  CHECK(depth2.depth[depth2.local[2]] == 1);
  CHECK(depth2.depth[depth2.local[3]] == 2);
  CHECK(depth2.frontier == std::vector<char>{0, 0, 0, 0});
}

TEST_CASE("the band never leaves the two paired blocks") {
  const Graph g = test::unit_path(5);
  const Partition p = assign(g, {0, 0, 1, 1, 2}, 3);
  const Band band = extract_band(g, p, {0, 1}, 9);
  CHECK(band.nodes.size() == 4);
  CHECK(!band.contains(4));
  const auto idx3 = band.local[3];
  CHECK(band.frontier[idx3] == 1); // node 3 borders block 2
}

TEST_CASE("an uncut pair yields an empty band and a silent pass") {
  const Graph g = test::unit_path(4);
  const Partition p = assign(g, {0, 0, 2, 1}, 3); // blocks 0 and 1 never touch
  const Band band = extract_band(g, p, {0, 1}, 3);
  CHECK(band.nodes.empty());
  Partition copy = p;
  const MoveLog log =
      fm_pass(g, band, copy, {10, 10}, RefineConfig{}, 123);
  CHECK(log.moves.empty());
  CHECK(log.best_prefix == 0);
  CHECK(copy.block_of == p.block_of);
}

TEST_CASE("a pass takes the obvious single improving move") {
  const Graph g = test::unit_path(3);
  Partition p = assign(g, {0, 0, 1}, 2);
  REQUIRE(p.cut == 1);
  const Band band = extract_band(g, p, {0, 1}, 2);
  const MoveLog log = fm_pass(g, band, p, {3, 3}, RefineConfig{}, 5);
  CHECK(log.best_cut == 0);
  CHECK(log.best_overflow == 0);
  CHECK(p.cut == 0);
  REQUIRE(log.best_prefix >= 1);
  CHECK(log.moves[0].node == 2);
  CHECK(log.moves[0].gain == 1);
  CHECK(log.moves[0].cut_after == 0);
}

TEST_CASE("tight bounds roll a tempting move all the way back") {
  // Pulling node 2 over empties the cut but overloads block 0.
  const Graph g = test::unit_path(3);
  Partition p = assign(g, {0, 0, 1}, 2);
  const Band band = extract_band(g, p, {0, 1}, 2);
  const MoveLog log = fm_pass(g, band, p, {2, 2}, RefineConfig{}, 5);
  CHECK(log.best_prefix == 0);
  CHECK(log.best_overflow == 0);
  CHECK(log.best_cut == 1);
  CHECK(p.block_of == std::vector<BlockID>{0, 0, 1});
  CHECK(p.cut == 1);
}

TEST_CASE("an overloaded side is drained before gains are compared") {
  LopsidedFixture f;
  RefineConfig cfg;

  cfg.queue = QueueStrategy::TopGain;
  {
    // No overload: the cross node 3 offers the bigger gain.
    Partition p = f.p;
    const Band band = extract_band(f.g, p, f.pair, 3);
    const MoveLog log = fm_pass(f.g, band, p, {10, 10}, cfg, 7);
    REQUIRE(!log.moves.empty());
    CHECK(log.moves[0].node == 3);
    CHECK(log.moves[0].from == 1);
  }
  {
    // Block 0 exceeds its bound, so its side moves first despite the gain.
    Partition p = f.p;
    const Band band = extract_band(f.g, p, f.pair, 3);
    const MoveLog log = fm_pass(f.g, band, p, {2, 3}, cfg, 7);
    REQUIRE(!log.moves.empty());
    CHECK(log.moves[0].from == 0);
  }
}

TEST_CASE("queue strategies pick their distinctive first side") {
  LopsidedFixture f;
  RefineConfig cfg;
  {
    cfg.queue = QueueStrategy::MaxLoad;
    Partition p = f.p;
    const Band band = extract_band(f.g, p, f.pair, 3);
    const MoveLog log = fm_pass(f.g, band, p, {10, 10}, cfg, 7);
    REQUIRE(!log.moves.empty());
    CHECK(log.moves[0].from == 0); // heavier block moves first
  }
  {
    cfg.queue = QueueStrategy::Alternate;
    Partition p = f.p;
    const Band band = extract_band(f.g, p, f.pair, 3);
    const MoveLog log = fm_pass(f.g, band, p, {10, 10}, cfg, 7);
    REQUIRE(log.moves.size() >= 2);
    CHECK(log.moves[0].from == 0); // alternation starts on side a
    CHECK(log.moves[1].from == 1);
  }
  {
    cfg.queue = QueueStrategy::TopGainMaxLoad;
    Partition p = f.p;
    const Band band = extract_band(f.g, p, f.pair, 3);
    const MoveLog log = fm_pass(f.g, band, p, {1, 0}, cfg, 7);
    REQUIRE(!log.moves.empty());
    CHECK(log.moves[0].from == 0); // both overloaded: heavier side drains
  }
}

TEST_CASE("queue strategy names parse back to their value") {
  for (const QueueStrategy q :
       {QueueStrategy::TopGain, QueueStrategy::Alternate,
        QueueStrategy::TopGainMaxLoad, QueueStrategy::MaxLoad}) {
    const auto parsed = parse_queue(queue_name(q));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == q);
  }
  CHECK(!parse_queue("steepest").has_value());
}

TEST_CASE("passes move each node at most once and log exact outcomes") {
  Rng rng(53);
  for (int round = 0; round < 60; ++round) {
    const NodeID n = 10 + static_cast<NodeID>(rand_index(rng, 91));
    const Graph g = test::random_graph(rng, n, 0.1, 9, 2);
    const Partition start = test::random_partition(rng, g, 2);
    const PairBounds bounds{g.total_node_weight(), g.total_node_weight()};
    const Band band = extract_band(g, start, {0, 1}, 2);

    Partition p = start;
    RefineConfig cfg;
    cfg.alpha_patience = 0.2;
    const MoveLog log =
        fm_pass(g, band, p, bounds, cfg, seed_hash({53, 1, static_cast<std::uint64_t>(round)}));

    std::set<NodeID> movers;
    Partition replay = start;
    for (const Move &mv : log.moves) {
      CHECK(movers.insert(mv.node).second);
      CHECK(band.contains(mv.node));
      CHECK(mv.from == replay.block_of[mv.node]);
      const EdgeWeight before = replay.cut;
      replay.move_node(g, mv.node, mv.to);
      CHECK(replay.cut == before - mv.gain);
      CHECK(mv.cut_after == replay.cut);
      CHECK(mv.overflow_after == pair_overflow(replay, {0, 1}, bounds));
    }

    // The recorded best prefix is the lexicographic argmin over all
    // prefixes, with ties resolved toward the shorter one.
    std::size_t best = 0;
    NodeWeight best_over = pair_overflow(start, {0, 1}, bounds);
    EdgeWeight best_cut = start.cut;
    for (std::size_t i = 0; i < log.moves.size(); ++i) {
      const Move &mv = log.moves[i];
      if (mv.overflow_after < best_over ||
          (mv.overflow_after == best_over && mv.cut_after < best_cut)) {
        best = i + 1;
        best_over = mv.overflow_after;
        best_cut = mv.cut_after;
      }
    }
    CHECK(log.best_prefix == best);
    CHECK(log.best_overflow == best_over);
    CHECK(log.best_cut == best_cut);

    // The pass itself rolled back to exactly that prefix.
    Partition expect = start;
    for (std::size_t i = 0; i < log.best_prefix; ++i) {
      expect.move_node(g, log.moves[i].node, log.moves[i].to);
    }
    CHECK(p.block_of == expect.block_of);
    CHECK(p.cut == log.best_cut);
  }
}

TEST_CASE("pair refinement never worsens and reports exact deltas") {
  Rng rng(59);
  for (int round = 0; round < 60; ++round) {
    const NodeID n = 10 + static_cast<NodeID>(rand_index(rng, 91));
    const Graph g = test::random_graph(rng, n, 0.12, 9, 2);
    const BlockID k = 2 + static_cast<BlockID>(rand_index(rng, 4));
    const Partition p = test::random_partition(rng, g, k);
    const QuotientGraph q = build_quotient(g, p);
    if (q.edges.empty()) {
      continue;
    }
    const auto &qe = q.edges[rand_index(rng, q.edges.size())];
    const BlockPair pair{qe.a, qe.b};
    const BalanceSpec spec = make_balance_spec(g, k, 0.1);

    const PairResult r = refine_pair(
        g, p, pair, spec, RefineConfig{},
        seed_hash({59, 2, static_cast<std::uint64_t>(round)}),
        seed_hash({59, 3, static_cast<std::uint64_t>(round)}));

    CHECK(r.delta_overflow <= 0);
    if (r.delta_overflow == 0) {
      CHECK(r.delta_cut <= 0);
    }

    const PairBounds bounds{spec.l_max, spec.l_max};
    const NodeWeight over_before = pair_overflow(p, pair, bounds);
    Partition replay = p;
    apply_moves(g, replay, r.moves);
    CHECK(replay.cut - p.cut == r.delta_cut);
    CHECK(pair_overflow(replay, pair, bounds) - over_before ==
          r.delta_overflow);
    for (const Move &mv : r.moves) {
      const bool in_pair = (mv.from == pair.a && mv.to == pair.b) ||
                           (mv.from == pair.b && mv.to == pair.a);
      CHECK(in_pair);
    }
    CHECK(replay.consistent_with(g));
  }
}

TEST_CASE("equal leg seeds tie toward the first search") {
  const Graph g = test::unit_path(4);
  const Partition p = assign(g, {0, 0, 1, 1}, 2);
  const PairResult r =
      refine_pair(g, p, {0, 1}, PairBounds{4, 4}, RefineConfig{}, 77, 77);
  CHECK(!r.adopted_b);
}

TEST_CASE("apply_moves replays a move list verbatim") {
  const Graph g = test::unit_path(4);
  Partition p = assign(g, {0, 0, 1, 1}, 2);
  const std::vector<Move> moves = {{2, 1, 0, 0, 0, 0}, {3, 1, 0, 0, 0, 0}};
  apply_moves(g, p, moves);
  CHECK(p.block_of == std::vector<BlockID>{0, 0, 0, 0});
  CHECK(p.cut == 0);
  CHECK(p.block_weight[0] == 4);
}
