#include "mgp/quotient.hpp"

#include <algorithm>
#include <cassert>

#include "mgp/seeds.hpp"

namespace mgp {

int QuotientGraph::max_degree() const {
  int d = 0;
  for (int x : degree) {
    d = std::max(d, x);
  }
  return d;
}

QuotientGraph build_quotient(const Graph &g, const Partition &p) {
  QuotientGraph q;
  q.k = p.k;
  std::vector<std::pair<std::pair<BlockID, BlockID>, EdgeWeight>> pairs;
  for (EdgeID e = 0; e < g.m(); ++e) {
    const Edge &ed = g.edge(e);
    BlockID a = p.block_of[ed.u];
    BlockID b = p.block_of[ed.v];
    if (a == b) {
      continue;
    }
    if (a > b) {
      std::swap(a, b);
    }
    pairs.push_back({{a, b}, ed.weight});
  }
  std::sort(pairs.begin(), pairs.end());
  q.degree.assign(static_cast<std::size_t>(q.k), 0);
  for (const auto &[pair, w] : pairs) {
    if (!q.edges.empty() && q.edges.back().a == pair.first &&
        q.edges.back().b == pair.second) {
      q.edges.back().weight += w;
      continue;
    }
    q.edges.push_back({pair.first, pair.second, w});
    ++q.degree[static_cast<std::size_t>(pair.first)];
    ++q.degree[static_cast<std::size_t>(pair.second)];
  }
  return q;
}

EdgeColoring color_edges(const QuotientGraph &q, std::uint64_t seed) {
  EdgeColoring out;
  out.color.assign(q.edges.size(), -1);
  if (q.edges.empty()) {
    return out;
  }
  const int palette = 2 * q.max_degree() - 1;
  const std::size_t nb = static_cast<std::size_t>(q.k);
  std::vector<std::vector<char>> free_color(
      nb, std::vector<char>(static_cast<std::size_t>(palette), 1));
  auto assign = [&](std::size_t e, int c) {
    out.color[e] = c;
    free_color[static_cast<std::size_t>(q.edges[e].a)]
              [static_cast<std::size_t>(c)] = 0;
    free_color[static_cast<std::size_t>(q.edges[e].b)]
              [static_cast<std::size_t>(c)] = 0;
  };
  auto min_common_free = [&](BlockID a, BlockID b) {
    for (int c = 0; c < palette; ++c) {
      if (free_color[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
          free_color[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]) {
        return c;
      }
    }
    // The palette of 2*max_degree - 1 colors always leaves a common color
    // while an incident edge is still uncolored.
    assert(false);
    return 0;
  };

  Rng rng(seed_hash({seed, 0x71636f6c6f72ULL}));
  std::size_t remaining = q.edges.size();
  const std::uint64_t max_rounds = 64 * q.edges.size();
  for (std::uint64_t round = 0; round < max_rounds && remaining > 0;
       ++round) {
    std::vector<std::vector<std::size_t>> open(nb);
    for (std::size_t e = 0; e < q.edges.size(); ++e) {
      if (out.color[e] == -1) {
        open[static_cast<std::size_t>(q.edges[e].a)].push_back(e);
        open[static_cast<std::size_t>(q.edges[e].b)].push_back(e);
      }
    }
    std::vector<char> active(nb, 0);
    for (std::size_t b = 0; b < nb; ++b) {
      if (!open[b].empty()) {
        active[b] = rand_coin(rng) ? 1 : 0;
      }
    }
    // Proposals to passive blocks; a block serves its lowest-id proposer.
    std::vector<BlockID> sender_of(nb, kNoBlock);
    std::vector<std::size_t> edge_of(nb, 0);
    for (std::size_t b = 0; b < nb; ++b) {
      if (!active[b]) {
        continue;
      }
      const std::size_t e = open[b][rand_index(rng, open[b].size())];
      const BlockID other = q.edges[e].a == static_cast<BlockID>(b)
                                ? q.edges[e].b
                                : q.edges[e].a;
      if (active[static_cast<std::size_t>(other)]) {
        continue; // proposals to other active blocks are dropped
      }
      const std::size_t o = static_cast<std::size_t>(other);
      if (sender_of[o] == kNoBlock ||
          static_cast<BlockID>(b) < sender_of[o]) {
        sender_of[o] = static_cast<BlockID>(b);
        edge_of[o] = e;
      }
    }
    // Served edges within a round are block-disjoint: every sender proposes
    // exactly one edge and every server accepts exactly one.
    for (std::size_t b = 0; b < nb; ++b) {
      if (sender_of[b] == kNoBlock) {
        continue;
      }
      const std::size_t e = edge_of[b];
      assign(e, min_common_free(q.edges[e].a, q.edges[e].b));
      --remaining;
    }
  }
  // Deterministic cleanup in case the randomized rounds ran out.
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    if (out.color[e] == -1) {
      assign(e, min_common_free(q.edges[e].a, q.edges[e].b));
    }
  }
  int max_color = -1;
  for (int c : out.color) {
    max_color = std::max(max_color, c);
  }
  out.num_colors = max_color + 1;
  return out;
}

bool is_proper(const QuotientGraph &q, const EdgeColoring &c) {
  for (std::size_t i = 0; i < q.edges.size(); ++i) {
    if (c.color[i] < 0) {
      return false;
    }
    for (std::size_t j = i + 1; j < q.edges.size(); ++j) {
      if (c.color[i] != c.color[j]) {
        continue;
      }
      const auto &ei = q.edges[i];
      const auto &ej = q.edges[j];
      if (ei.a == ej.a || ei.a == ej.b || ei.b == ej.a || ei.b == ej.b) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> schedule_rounds(const QuotientGraph &q,
                                                      const EdgeColoring &c) {
  std::vector<std::vector<std::size_t>> by_color(
      static_cast<std::size_t>(std::max(c.num_colors, 0)));
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    by_color[static_cast<std::size_t>(c.color[e])].push_back(e);
  }
  std::vector<std::vector<std::size_t>> rounds;
  for (auto &cls : by_color) {
    if (!cls.empty()) {
      rounds.push_back(std::move(cls));
    }
  }
  return rounds;
}

} // namespace mgp
