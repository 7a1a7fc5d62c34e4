#include "mgp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "mgp/generators.hpp"
#include "mgp/io.hpp"

namespace mgp {

double geometric_mean(std::span<const double> values) {
  if (values.empty()) {
    throw std::domain_error("geometric_mean: empty input");
  }
  double log_sum = 0.0;
  for (const double v : values) {
    if (v <= 0.0) {
      throw std::domain_error("geometric_mean: nonpositive value");
    }
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(values.size()));
}

std::vector<BenchInstance> builtin_suite() {
  std::vector<BenchInstance> out;
  out.push_back({"rgg10", gen_rgg(10, 1)});
  out.push_back({"rgg12", gen_rgg(12, 1)});
  out.push_back({"grid64", gen_grid(64, 64)});
  out.push_back({"grid100", gen_grid(100, 100)});
  out.push_back({"twocomm", gen_two_community(1000, 6, 16, 1)});
  return out;
}

BenchReport run_bench(const std::vector<BenchInstance> &instances,
                      std::span<const BlockID> ks, int num_seeds,
                      const RunConfig &base,
                      const std::optional<std::filesystem::path> &out_dir) {
  BenchReport report;
  std::vector<double> avg_cuts;
  std::vector<double> times;
  for (const BenchInstance &inst : instances) {
    for (const BlockID k : ks) {
      BenchRow row;
      row.instance = inst.name;
      row.k = k;
      double cut_sum = 0.0;
      double balance_sum = 0.0;
      double seconds_sum = 0.0;
      const double perfect =
          static_cast<double>(inst.graph.total_node_weight()) /
          static_cast<double>(k);
      for (int s = 1; s <= num_seeds; ++s) {
        RunConfig cfg = base;
        cfg.k = k;
        cfg.master_seed = static_cast<std::uint64_t>(s);
        const RunResult result = run_multilevel(inst.graph, cfg);
        cut_sum += static_cast<double>(result.stats.cut);
        if (row.runs == 0 || result.stats.cut < row.best_cut) {
          row.best_cut = result.stats.cut;
        }
        NodeWeight max_block = 0;
        for (const NodeWeight w : result.partition.block_weight) {
          max_block = std::max(max_block, w);
        }
        balance_sum += static_cast<double>(max_block) / perfect;
        seconds_sum += result.stats.seconds_total;
        row.balanced_runs += result.stats.balanced ? 1 : 0;
        ++row.runs;
        if (out_dir) {
          const auto file =
              *out_dir / (inst.name + ".k" + std::to_string(k) + ".s" +
                          std::to_string(s) + ".part");
          write_partition(result.partition.block_of, file);
        }
      }
      row.avg_cut = cut_sum / row.runs;
      row.avg_balance = balance_sum / row.runs;
      row.avg_seconds = seconds_sum / row.runs;
      avg_cuts.push_back(row.avg_cut);
      times.push_back(row.avg_seconds);
      report.rows.push_back(std::move(row));
    }
  }
  if (!avg_cuts.empty()) {
    report.geo_mean_avg_cut = geometric_mean(avg_cuts);
    double t = 0.0;
    for (const double x : times) {
      t += x;
    }
    report.mean_seconds = t / static_cast<double>(times.size());
  }
  return report;
}

std::string format_bench(const BenchReport &report) {
  std::ostringstream out;
  out << "instance      k   runs  avg_cut      best_cut  avg_balance  "
         "avg_seconds  balanced\n";
  char buf[160];
  for (const BenchRow &row : report.rows) {
    std::snprintf(buf, sizeof(buf),
                  "%-12s %3d %6d %12.1f %9lld %12.4f %12.4f %5d/%d\n",
                  row.instance.c_str(), row.k, row.runs, row.avg_cut,
                  static_cast<long long>(row.best_cut), row.avg_balance,
                  row.avg_seconds, row.balanced_runs, row.runs);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf),
                "geometric mean of avg cuts: %.2f, mean seconds per row: %.4f\n",
                report.geo_mean_avg_cut, report.mean_seconds);
  out << buf;
  return out.str();
}

} // namespace mgp
