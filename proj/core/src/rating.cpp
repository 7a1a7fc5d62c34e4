#include "mgp/rating.hpp"

#include <limits>

namespace mgp {

std::string_view rating_name(RatingKind kind) {
  switch (kind) {
  case RatingKind::Weight:
    return "weight";
  case RatingKind::Expansion:
    return "expansion";
  case RatingKind::ExpansionStar:
    return "expansion_star";
  case RatingKind::ExpansionStar2:
    return "expansion_star2";
  case RatingKind::InnerOuter:
    return "inner_outer";
  }
  return "?";
}

std::optional<RatingKind> parse_rating(std::string_view name) {
  for (const RatingKind kind :
       {RatingKind::Weight, RatingKind::Expansion, RatingKind::ExpansionStar,
        RatingKind::ExpansionStar2, RatingKind::InnerOuter}) {
    if (name == rating_name(kind)) {
      return kind;
    }
  }
  return std::nullopt;
}

EdgeWeight out_weight(const Graph &g, NodeID v) {
  EdgeWeight sum = 0;
  for (const Arc &a : g.arcs(v)) {
    sum += a.weight;
  }
  return sum;
}

double rate_edge(const Graph &g, EdgeID e, RatingKind kind) {
  const Edge &edge = g.edge(e);
  const auto w = static_cast<double>(edge.weight);
  const auto cu = static_cast<double>(g.node_weight(edge.u));
  const auto cv = static_cast<double>(g.node_weight(edge.v));
  switch (kind) {
  case RatingKind::Weight:
    return w;
  case RatingKind::Expansion:
    return w / (cu + cv);
  case RatingKind::ExpansionStar:
    return w / (cu * cv);
  case RatingKind::ExpansionStar2:
    return w * w / (cu * cv);
  case RatingKind::InnerOuter: {
    const EdgeWeight denom =
        out_weight(g, edge.u) + out_weight(g, edge.v) - 2 * edge.weight;
    if (denom == 0) {
      return std::numeric_limits<double>::infinity();
    }
    return w / static_cast<double>(denom);
  }
  }
  return 0.0;
}

std::vector<double> rate_all(const Graph &g, RatingKind kind) {
  std::vector<double> ratings(g.edge_count());
  for (EdgeID e = 0; e < g.edge_count(); ++e) {
    ratings[e] = rate_edge(g, e, kind);
  }
  return ratings;
}

} // namespace mgp
