#pragma once

#include <cstdint>
#include <limits>

namespace mgp {

using NodeID = std::uint32_t;
using EdgeID = std::uint32_t;
using BlockID = std::int32_t;

// Node and edge weights are integral throughout; only ratings are real-valued.
using NodeWeight = std::int64_t;
using EdgeWeight = std::int64_t;

inline constexpr NodeID kInvalidNode = std::numeric_limits<NodeID>::max();
inline constexpr EdgeID kInvalidEdge = std::numeric_limits<EdgeID>::max();
inline constexpr BlockID kNoBlock = -1;

} // namespace mgp
