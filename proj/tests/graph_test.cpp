#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "common.hpp"
#include "mgp/contraction.hpp"
#include "mgp/graph.hpp"
#include "mgp/matchers.hpp"
#include "mgp/partition.hpp"
#include "mgp/rating.hpp"

using namespace mgp;

TEST_CASE("builder stores edges canonically sorted by endpoints") {
  const Graph g = test::triangle();
  REQUIRE(g.n() == 3);
  REQUIRE(g.m() == 3);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.edge(0).weight == 1);
  CHECK(g.edge(1).u == 0);
  CHECK(g.edge(1).v == 2);
  CHECK(g.edge(1).weight == 3);
  CHECK(g.edge(2).u == 1);
  CHECK(g.edge(2).v == 2);
  CHECK(g.edge(2).weight == 2);
  CHECK(g.total_edge_weight() == 6);
  CHECK(g.total_node_weight() == 3);
  CHECK(g.max_node_weight() == 1);
}

TEST_CASE("every undirected edge appears as two mirrored arcs") {
  const Graph g = test::triangle();
  std::size_t arc_count = 0;
  for (NodeID v = 0; v < g.n(); ++v) {
    arc_count += g.arcs(v).size();
    CHECK(g.degree(v) == 2);
    for (const Arc &arc : g.arcs(v)) {
      const Edge &e = g.edge(arc.edge);
      CHECK(arc.weight == e.weight);
      const bool endpoint = (e.u == v && e.v == arc.target) ||
                            (e.v == v && e.u == arc.target);
      CHECK(endpoint);
    }
  }
  CHECK(arc_count == 2 * g.m());
}

TEST_CASE("parallel edges merge by summing their weights") {
  const std::vector<EdgeDef> edges = {{0, 1, 2}, {1, 0, 3}};
  const Graph g = build_graph(2, edges);
  REQUIRE(g.m() == 1);
  CHECK(g.edge(0).weight == 5);
}

TEST_CASE("builder rejects malformed edges and weights") {
  const std::vector<EdgeDef> loop = {{1, 1, 1}};
  CHECK_THROWS_AS(build_graph(2, loop), std::invalid_argument);
  const std::vector<EdgeDef> range = {{0, 2, 1}};
  CHECK_THROWS_AS(build_graph(2, range), std::invalid_argument);
  const std::vector<EdgeDef> zero = {{0, 1, 0}};
  CHECK_THROWS_AS(build_graph(2, zero), std::invalid_argument);
  const std::vector<EdgeDef> ok = {{0, 1, 1}};
  const std::vector<NodeWeight> negative = {1, -1};
  CHECK_THROWS_AS(build_graph(2, ok, negative), std::invalid_argument);
}

TEST_CASE("node weights default to one and can be supplied") {
  const std::vector<EdgeDef> edges = {{0, 1, 1}};
  const Graph unit = build_graph(2, edges);
  CHECK(unit.node_weight(0) == 1);
  CHECK(unit.node_weight(1) == 1);
  const std::vector<NodeWeight> weights = {4, 6};
  const Graph heavy = build_graph(2, edges, weights);
  CHECK(heavy.node_weight(1) == 6);
  CHECK(heavy.total_node_weight() == 10);
  CHECK(heavy.max_node_weight() == 6);
}

TEST_CASE("with_coords attaches coordinates of matching size") {
  const Graph g = test::triangle();
  CHECK(!g.has_coords());
  const Graph gc = g.with_coords({{0, 0}, {1, 0}, {0, 1}});
  CHECK(gc.has_coords());
  CHECK(gc.coords()[2][1] == 1.0);
  CHECK_THROWS_AS(g.with_coords({{0, 0}}), std::invalid_argument);
}

TEST_CASE("induced subgraph keeps exactly the internal edges") {
  const Graph g = test::triangle();
  const std::vector<NodeID> nodes = {0, 2};
  const Subgraph sub = induced_subgraph(g, nodes);
  REQUIRE(sub.graph.n() == 2);
  REQUIRE(sub.graph.m() == 1);
  CHECK(sub.graph.edge(0).weight == 3);
  CHECK(sub.to_parent_node[0] == 0);
  CHECK(sub.to_parent_node[1] == 2);
  CHECK(sub.to_parent_edge[0] == 1); // (0,2) is edge 1 of the parent
}

TEST_CASE("max block weight follows the slack formula") {
  // 10 unit nodes, k = 2, eps = 0.03: floor(1.03 * 10 / 2) + 1 = 6.
  const Graph g = test::unit_path(10);
  const BalanceSpec spec = make_balance_spec(g, 2, 0.03);
  CHECK(spec.l_max == 6);
  CHECK(make_balance_spec(g, 3, 0.03).l_max == 4);
  CHECK(make_balance_spec(g, 2, 0.0).l_max == 6);
  CHECK(make_balance_spec(g, 2, 0.5).l_max == 8);

  const std::vector<EdgeDef> edges = {{0, 1, 1}, {1, 2, 1}};
  const std::vector<NodeWeight> weights = {5, 3, 2};
  const Graph h = build_graph(3, edges, weights);
  // floor(1.1 * 10 / 2) + 5 = 10.
  CHECK(make_balance_spec(h, 2, 0.1).l_max == 10);

  CHECK_THROWS_AS(make_balance_spec(g, 0, 0.03), std::invalid_argument);
  CHECK_THROWS_AS(make_balance_spec(g, 2, -0.1), std::invalid_argument);
}

TEST_CASE("cut counts each crossing edge once") {
  const Graph g = test::triangle();
  CHECK(cut_weight(g, std::vector<BlockID>{0, 1, 1}) == 4);
  CHECK(cut_weight(g, std::vector<BlockID>{0, 0, 1}) == 5);
  CHECK(cut_weight(g, std::vector<BlockID>{0, 0, 0}) == 0);
  CHECK(cut_weight(g, std::vector<BlockID>{0, 1, 2}) == 6);
}

TEST_CASE("imbalance is the worst overshoot over all blocks") {
  const Graph g = test::unit_path(10);
  const BalanceSpec spec = make_balance_spec(g, 2, 0.0); // l_max 6
  std::vector<BlockID> blocks(10, 0);
  for (NodeID v = 8; v < 10; ++v) {
    blocks[v] = 1;
  }
  const Partition p = Partition::from_assignment(g, blocks, 2);
  CHECK(imbalance(p, spec) == 2); // block 0 weighs 8
  std::fill(blocks.begin() + 5, blocks.end(), 1);
  CHECK(imbalance(Partition::from_assignment(g, blocks, 2), spec) == 0);
}

TEST_CASE("incremental moves match recomputed caches") {
  Rng rng(7);
  for (int round = 0; round < 30; ++round) {
    const NodeID n = 5 + static_cast<NodeID>(rand_index(rng, 46));
    const Graph g = test::random_graph(rng, n, 0.2, 9, 4);
    const BlockID k = 2 + static_cast<BlockID>(rand_index(rng, 4));
    Partition p = test::random_partition(rng, g, k);
    REQUIRE(p.consistent_with(g));
    for (int step = 0; step < 40; ++step) {
      const NodeID v = static_cast<NodeID>(rand_index(rng, n));
      const BlockID to =
          static_cast<BlockID>(rand_index(rng, static_cast<std::uint64_t>(k)));
      p.move_node(g, v, to);
    }
    CHECK(p.consistent_with(g));
    CHECK(p.cut == cut_weight(g, p.block_of));
  }
}

namespace {

Matching random_matching(Rng &rng, const Graph &g) {
  std::vector<EdgeID> order(g.m());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rand_index(rng, i)]);
  }
  Matching m = Matching::empty(g.n());
  for (const EdgeID e : order) {
    const Edge &edge = g.edge(e);
    if (!m.matched(edge.u) && !m.matched(edge.v) && rand_coin(rng)) {
      m.add(edge.u, edge.v, edge.weight, static_cast<double>(edge.weight));
    }
  }
  return m;
}

EdgeWeight weighted_degree(const Graph &g, NodeID v) {
  EdgeWeight sum = 0;
  for (const Arc &arc : g.arcs(v)) {
    sum += arc.weight;
  }
  return sum;
}

} // namespace

TEST_CASE("contraction merges pairs and conserves node weight") {
  const Graph g = test::triangle();
  Matching m = Matching::empty(3);
  m.add(1, 2, 2, 2.0);
  const ContractionResult res = contract_matching(g, m);
  REQUIRE(res.graph.n() == 2);
  REQUIRE(res.graph.m() == 1);
  CHECK(res.graph.edge(0).weight == 4); // (0,1) and (0,2) fold together
  CHECK(res.graph.node_weight(res.coarse_map[1]) == 2);
  CHECK(res.graph.total_node_weight() == g.total_node_weight());
  CHECK(res.coarse_map[1] == res.coarse_map[2]);
  CHECK(res.coarse_map[0] != res.coarse_map[1]);
}

TEST_CASE("contraction rejects an invalid matching") {
  const Graph g = test::triangle();
  Matching m = Matching::empty(3);
  m.add(1, 2, 5, 5.0); // wrong weight for the (1,2) edge
  CHECK_THROWS_AS(contract_matching(g, m), std::invalid_argument);
}

TEST_CASE("unmatched nodes keep their weighted degree across contraction") {
  Rng rng(11);
  for (int round = 0; round < 40; ++round) {
    const NodeID n = 4 + static_cast<NodeID>(rand_index(rng, 47));
    const Graph g = test::random_graph(rng, n, 0.15, 9, 3);
    const Matching m = random_matching(rng, g);
    const ContractionResult res = contract_matching(g, m);
    CHECK(res.graph.total_node_weight() == g.total_node_weight());
    EdgeWeight matched = 0;
    for (const MatchedEdge &e : m.edges) {
      matched += e.weight;
    }
    CHECK(res.graph.total_edge_weight() == g.total_edge_weight() - matched);
    for (NodeID v = 0; v < n; ++v) {
      if (!m.matched(v)) {
        CHECK(weighted_degree(res.graph, res.coarse_map[v]) ==
              weighted_degree(g, v));
      }
    }
  }
}

TEST_CASE("projection preserves cut and block weights exactly") {
  Rng rng(23);
  for (int round = 0; round < 40; ++round) {
    const NodeID n = 4 + static_cast<NodeID>(rand_index(rng, 47));
    const Graph g = test::random_graph(rng, n, 0.2, 9, 3);
    const Matching m = random_matching(rng, g);
    const ContractionResult res = contract_matching(g, m);
    const BlockID k = 2 + static_cast<BlockID>(rand_index(rng, 3));
    const Partition coarse = test::random_partition(rng, res.graph, k);
    const Partition fine = project_partition(g, coarse, res.coarse_map);
    CHECK(fine.cut == coarse.cut);
    CHECK(fine.block_weight == coarse.block_weight);
    CHECK(fine.consistent_with(g));
    for (NodeID v = 0; v < n; ++v) {
      CHECK(fine.block_of[v] == coarse.block_of[res.coarse_map[v]]);
    }
  }
}

TEST_CASE("coarse coordinates average the contracted pair") {
  const std::vector<EdgeDef> edges = {{0, 1, 1}};
  const std::vector<NodeWeight> weights = {1, 3};
  const Graph g =
      build_graph(2, edges, weights, Coords{{0.0, 0.0}, {4.0, 8.0}});
  Matching m = Matching::empty(2);
  m.add(0, 1, 1, 1.0);
  const ContractionResult res = contract_matching(g, m);
  REQUIRE(res.graph.has_coords());
  CHECK(res.graph.coords()[0][0] == doctest::Approx(3.0));
  CHECK(res.graph.coords()[0][1] == doctest::Approx(6.0));
}
