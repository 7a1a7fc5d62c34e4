#include "mgp/generators.hpp"

#include <algorithm>
#include <cmath>

#include "mgp/seeds.hpp"

namespace mgp {

std::vector<EdgeDef> edges_within_radius(const Coords &points, double radius) {
  const NodeID n = static_cast<NodeID>(points.size());
  std::vector<EdgeDef> edges;
  if (n == 0 || radius <= 0.0) {
    return edges;
  }
  // Bucket grid with cell size >= radius: neighbors lie in the 3x3 block.
  const int cells = std::max(1, static_cast<int>(1.0 / radius));
  const double cell = 1.0 / cells;
  auto cell_of = [&](double x) {
    return std::min(cells - 1, std::max(0, static_cast<int>(x / cell)));
  };
  std::vector<std::vector<NodeID>> grid(
      static_cast<std::size_t>(cells) * cells);
  for (NodeID v = 0; v < n; ++v) {
    grid[static_cast<std::size_t>(cell_of(points[v][1])) * cells +
         cell_of(points[v][0])]
        .push_back(v);
  }
  const double r2 = radius * radius;
  for (NodeID v = 0; v < n; ++v) {
    const int cx = cell_of(points[v][0]);
    const int cy = cell_of(points[v][1]);
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int nx = cx + dx;
        const int ny = cy + dy;
        if (nx < 0 || ny < 0 || nx >= cells || ny >= cells) {
          continue;
        }
        for (const NodeID w :
             grid[static_cast<std::size_t>(ny) * cells + nx]) {
          if (w <= v) {
            continue;
          }
          const double ex = points[v][0] - points[w][0];
          const double ey = points[v][1] - points[w][1];
          if (ex * ex + ey * ey < r2) {
            edges.push_back({v, w, 1});
          }
        }
      }
    }
  }
  return edges;
}

Graph gen_rgg(unsigned exponent, std::uint64_t seed) {
  const NodeID n = NodeID{1} << exponent;
  Rng rng(seed_hash({seed, 0x726767ULL}));
  Coords points(n);
  for (NodeID v = 0; v < n; ++v) {
    const double x = rand_unit(rng);
    const double y = rand_unit(rng);
    points[v] = {x, y};
  }
  const double radius =
      0.55 * std::sqrt(std::log(static_cast<double>(n)) /
                       static_cast<double>(n));
  return build_graph(n, edges_within_radius(points, radius), {}, points);
}

Graph gen_grid(NodeID rows, NodeID cols) {
  const NodeID n = rows * cols;
  std::vector<EdgeDef> edges;
  edges.reserve(static_cast<std::size_t>(2) * n);
  Coords coords(n);
  auto id = [&](NodeID r, NodeID c) { return r * cols + c; };
  for (NodeID r = 0; r < rows; ++r) {
    for (NodeID c = 0; c < cols; ++c) {
      coords[id(r, c)] = {static_cast<double>(c), static_cast<double>(r)};
      if (c + 1 < cols) {
        edges.push_back({id(r, c), id(r, c + 1), 1});
      }
      if (r + 1 < rows) {
        edges.push_back({id(r, c), id(r + 1, c), 1});
      }
    }
  }
  return build_graph(n, edges, {}, coords);
}

Graph gen_two_community(NodeID n_each, unsigned intra_degree,
                        unsigned cross_edges, std::uint64_t seed) {
  Rng rng(seed_hash({seed, 0x74776f63ULL}));
  const NodeID n = 2 * n_each;
  std::vector<EdgeDef> edges;
  for (int side = 0; side < 2; ++side) {
    const NodeID base = side == 0 ? 0 : n_each;
    for (NodeID v = 0; v < n_each; ++v) {
      for (unsigned d = 0; d < intra_degree; ++d) {
        const NodeID w = static_cast<NodeID>(rand_index(rng, n_each));
        if (w != v) {
          edges.push_back({base + v, base + w, 1});
        }
      }
    }
  }
  for (unsigned c = 0; c < cross_edges; ++c) {
    const NodeID u = static_cast<NodeID>(rand_index(rng, n_each));
    const NodeID w = static_cast<NodeID>(rand_index(rng, n_each));
    edges.push_back({u, n_each + w, 1});
  }
  // Parallel draws collapse when the graph is built; weights stay 1.
  std::vector<EdgeDef> dedup;
  std::sort(edges.begin(), edges.end(), [](const EdgeDef &a, const EdgeDef &b) {
    const NodeID au = std::min(a.u, a.v), av = std::max(a.u, a.v);
    const NodeID bu = std::min(b.u, b.v), bv = std::max(b.u, b.v);
    return au != bu ? au < bu : av < bv;
  });
  for (const EdgeDef &e : edges) {
    const NodeID u = std::min(e.u, e.v), v = std::max(e.u, e.v);
    if (dedup.empty() || dedup.back().u != u || dedup.back().v != v) {
      dedup.push_back({u, v, 1});
    }
  }
  return build_graph(n, dedup);
}

} // namespace mgp
