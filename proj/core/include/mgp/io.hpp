#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgp/graph.hpp"
#include "mgp/types.hpp"

namespace mgp {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a graph in the adjacency-list format: a header "n m [fmt]" with
/// fmt in {absent, 0, 1, 10, 11} (edge weights / node weights flags), one
/// 1-indexed neighbor line per node, '%' comment lines anywhere. Rejects
/// asymmetric adjacency, mismatched reciprocal edge weights, duplicate
/// entries and edge-count mismatches; messages carry the offending line.
Graph read_metis(const std::filesystem::path &path);

/// Writes the same format; the weight flags appear only when any node or
/// edge weight differs from 1.
void write_metis(const Graph &g, const std::filesystem::path &path);

/// One "x y" line per node; must supply exactly n points.
Coords read_coords(const std::filesystem::path &path, NodeID n);
void write_coords(const Coords &coords, const std::filesystem::path &path);

/// One 0-based block id per node, one per line.
void write_partition(const std::vector<BlockID> &block_of,
                     const std::filesystem::path &path);
std::vector<BlockID> read_partition(const std::filesystem::path &path,
                                    NodeID n);

} // namespace mgp
