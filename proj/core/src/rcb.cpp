#include "mgp/rcb.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace mgp {

namespace {

void rcb_recurse(const Coords &coords, std::vector<NodeID> &ids,
                 std::size_t begin, std::size_t end, BlockID P, BlockID base,
                 int depth, std::vector<BlockID> &block_of) {
  if (P <= 1) {
    for (std::size_t i = begin; i < end; ++i) {
      block_of[ids[i]] = base;
    }
    return;
  }
  const int axis = depth % 2;
  std::sort(ids.begin() + static_cast<std::ptrdiff_t>(begin),
            ids.begin() + static_cast<std::ptrdiff_t>(end),
            [&](NodeID a, NodeID b) {
              if (coords[a][axis] != coords[b][axis]) {
                return coords[a][axis] < coords[b][axis];
              }
              return a < b;
            });
  const BlockID pl = (P + 1) / 2;
  const std::size_t n = end - begin;
  const std::size_t nl =
      (n * static_cast<std::size_t>(pl) + static_cast<std::size_t>(P) - 1) /
      static_cast<std::size_t>(P);
  rcb_recurse(coords, ids, begin, begin + nl, pl, base, depth + 1, block_of);
  rcb_recurse(coords, ids, begin + nl, end, P - pl, base + pl, depth + 1,
              block_of);
}

} // namespace

BlockAssignment prepartition_rcb(const Coords &coords, BlockID P) {
  assert(P >= 1);
  const NodeID n = static_cast<NodeID>(coords.size());
  P = std::min<BlockID>(P, std::max<NodeID>(n, 1));
  BlockAssignment out;
  out.num_blocks = P;
  out.block_of.assign(n, 0);
  std::vector<NodeID> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  rcb_recurse(coords, ids, 0, n, P, 0, 0, out.block_of);
  return out;
}

BlockAssignment prepartition_ranges(NodeID n, BlockID P) {
  assert(P >= 1);
  P = std::min<BlockID>(P, std::max<NodeID>(n, 1));
  BlockAssignment out;
  out.num_blocks = P;
  out.block_of.assign(n, 0);
  for (NodeID v = 0; v < n; ++v) {
    // Even split: block b covers [b*n/P, (b+1)*n/P).
    out.block_of[v] = static_cast<BlockID>(
        (static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(P)) / n);
  }
  return out;
}

BlockAssignment make_prepartition(const Graph &g, BlockID P) {
  if (g.has_coords()) {
    return prepartition_rcb(g.coords(), P);
  }
  return prepartition_ranges(g.n(), P);
}

} // namespace mgp
