#pragma once

#include <cstdint>
#include <vector>

#include "mgp/graph.hpp"
#include "mgp/types.hpp"

namespace mgp {

/// Edges between point pairs at Euclidean distance strictly below radius.
std::vector<EdgeDef> edges_within_radius(const Coords &points, double radius);

/// Random geometric graph: n = 2^exponent points uniform in the unit square,
/// connection radius 0.55 * sqrt(ln(n) / n). Unit weights, coordinates kept.
Graph gen_rgg(unsigned exponent, std::uint64_t seed);

/// rows x cols grid with unit weights and (col, row) coordinates.
Graph gen_grid(NodeID rows, NodeID cols);

/// Two equally sized random communities with intra_degree draws per node
/// inside its community and cross_edges random bridges between them. The
/// drawn cut never exceeds cross_edges. No coordinates.
Graph gen_two_community(NodeID n_each, unsigned intra_degree,
                        unsigned cross_edges, std::uint64_t seed);

} // namespace mgp
