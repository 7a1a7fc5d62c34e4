#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mgp/graph.hpp"
#include "mgp/types.hpp"

namespace mgp {

// Edge-rating functions steering which edges get matched first:
//   Weight          w
//   Expansion       w / (c(u) + c(v))
//   ExpansionStar   w / (c(u) * c(v))
//   ExpansionStar2  w^2 / (c(u) * c(v))
//   InnerOuter      w / (Out(u) + Out(v) - 2w)
enum class RatingKind { Weight, Expansion, ExpansionStar, ExpansionStar2, InnerOuter };

std::string_view rating_name(RatingKind kind);
std::optional<RatingKind> parse_rating(std::string_view name);

/// Out(v): sum of the weights of v's incident edges.
EdgeWeight out_weight(const Graph &g, NodeID v);

/// Rates one edge. A zero InnerOuter denominator (the edge connects two
/// otherwise isolated nodes) maps to +infinity: such an edge is always worth
/// contracting.
double rate_edge(const Graph &g, EdgeID e, RatingKind kind);

/// rate_edge for every edge, in edge-id order.
std::vector<double> rate_all(const Graph &g, RatingKind kind);

} // namespace mgp
