#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mgp/graph.hpp"
#include "mgp/runtime.hpp"

namespace mgp {

/// Geometric mean; throws std::domain_error when any value is <= 0.
double geometric_mean(std::span<const double> values);

struct BenchInstance {
  std::string name;
  Graph graph;
};

/// The built-in instance mix: two random geometric graphs, two grids and a
/// planted two-community graph.
std::vector<BenchInstance> builtin_suite();

struct BenchRow {
  std::string instance;
  BlockID k = 0;
  int runs = 0;
  double avg_cut = 0.0;
  EdgeWeight best_cut = 0;
  double avg_balance = 0.0; // max block weight over perfect share
  double avg_seconds = 0.0;
  int balanced_runs = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double geo_mean_avg_cut = 0.0;
  double mean_seconds = 0.0;
};

/// Runs base over every (instance, k, seed) combination; seeds are 1..num_seeds.
/// When out_dir is set, the partition of every run is written there as
/// <instance>.k<k>.s<seed>.part.
BenchReport run_bench(const std::vector<BenchInstance> &instances,
                      std::span<const BlockID> ks, int num_seeds,
                      const RunConfig &base,
                      const std::optional<std::filesystem::path> &out_dir);

std::string format_bench(const BenchReport &report);

} // namespace mgp
