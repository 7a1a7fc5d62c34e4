#pragma once

#include "mgp/coarsen.hpp"
#include "mgp/graph.hpp"

namespace mgp {

/// Recursive coordinate bisection into P blocks. Splits alternate between the
/// x and y axis (x first) at the median; odd P puts the extra ceil(P/2)
/// share on the low side.
BlockAssignment prepartition_rcb(const Coords &coords, BlockID P);

/// Contiguous id ranges, the fallback when no coordinates are available.
BlockAssignment prepartition_ranges(NodeID n, BlockID P);

/// Coordinate bisection when g carries coordinates, id ranges otherwise.
/// P is clamped to the node count.
BlockAssignment make_prepartition(const Graph &g, BlockID P);

} // namespace mgp
