#include "mgp/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgp/bench.hpp"
#include "mgp/generators.hpp"
#include "mgp/io.hpp"
#include "mgp/presets.hpp"
#include "mgp/runtime.hpp"

namespace mgp {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitImbalanced = 3;

nlohmann::json stats_json(const RunStats &stats) {
  return nlohmann::json{
      {"cut", stats.cut},
      {"imbalance", stats.imbalance},
      {"l_max", stats.spec.l_max},
      {"seconds_per_phase",
       {{"coarsen", stats.seconds_coarsen},
        {"initial", stats.seconds_initial},
        {"refine", stats.seconds_refine},
        {"total", stats.seconds_total}}},
      {"seed", stats.master_seed},
  };
}

struct PartitionArgs {
  std::string graph_file;
  std::string coords_file;
  std::string output_file;
  std::string stats_format = "text";
  std::string stats_file;
  std::string preset = "fast";
  std::string rating;
  std::string matcher;
  std::string queue;
  std::string stop_rule;
  int k = 2;
  double epsilon = 0.03;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  int bfs_depth = -1;
  int local_iterations = -1;
  int repeats = -1;
  int max_global = -1;
  int prepart_blocks = -1;
  double alpha_patience = -1.0;
};

int run_partition(const PartitionArgs &args) {
  if (args.graph_file.empty()) {
    std::cerr << "missing input graph (--graph)\n";
    return kExitUsage;
  }
  const auto preset = parse_preset(args.preset);
  if (!preset) {
    std::cerr << "unknown preset '" << args.preset << "'\n";
    return kExitUsage;
  }
  RunConfig cfg = preset_config(*preset);
  cfg.k = args.k;
  cfg.epsilon = args.epsilon;
  cfg.master_seed = args.seed;
  cfg.workers = args.workers;
  if (!args.rating.empty()) {
    const auto r = parse_rating(args.rating);
    if (!r) {
      std::cerr << "unknown rating '" << args.rating << "'\n";
      return kExitUsage;
    }
    cfg.coarsen.rating = *r;
  }
  if (!args.matcher.empty()) {
    const auto m = parse_matcher(args.matcher);
    if (!m) {
      std::cerr << "unknown matcher '" << args.matcher << "'\n";
      return kExitUsage;
    }
    cfg.coarsen.matcher = *m;
  }
  if (!args.queue.empty()) {
    const auto q = parse_queue(args.queue);
    if (!q) {
      std::cerr << "unknown queue strategy '" << args.queue << "'\n";
      return kExitUsage;
    }
    cfg.refine.queue = *q;
  }
  if (!args.stop_rule.empty()) {
    const auto s = parse_stop_rule(args.stop_rule);
    if (!s) {
      std::cerr << "unknown stop rule '" << args.stop_rule << "'\n";
      return kExitUsage;
    }
    cfg.stop_rule = *s;
  }
  if (args.bfs_depth >= 0) {
    cfg.refine.bfs_depth = args.bfs_depth;
  }
  if (args.local_iterations >= 0) {
    cfg.refine.local_iterations = args.local_iterations;
  }
  if (args.repeats >= 0) {
    cfg.init.repeats = args.repeats;
  }
  if (args.max_global >= 0) {
    cfg.max_global_iterations = args.max_global;
  }
  if (args.prepart_blocks >= 0) {
    cfg.prepart_blocks = args.prepart_blocks;
  }
  if (args.alpha_patience >= 0.0) {
    cfg.refine.alpha_patience = args.alpha_patience;
  }

  Graph g;
  try {
    g = read_metis(args.graph_file);
    if (!args.coords_file.empty()) {
      g = g.with_coords(read_coords(args.coords_file, g.n()));
    }
  } catch (const IoError &e) {
    std::cerr << e.what() << '\n';
    return kExitIo;
  }

  RunResult result;
  try {
    result = run_multilevel(g, cfg);
  } catch (const std::invalid_argument &e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  if (args.stats_format == "json") {
    std::cout << stats_json(result.stats).dump(2) << '\n';
  } else {
    std::cout << "n=" << g.n() << " m=" << g.m() << " k=" << cfg.k
              << " cut=" << result.stats.cut
              << " imbalance=" << result.stats.imbalance
              << " l_max=" << result.stats.spec.l_max
              << " seconds=" << result.stats.seconds_total << '\n';
  }

  const std::string out_path = args.output_file.empty()
                                   ? args.graph_file + ".part"
                                   : args.output_file;
  try {
    write_partition(result.partition.block_of, out_path);
    if (!args.stats_file.empty()) {
      std::ofstream out(args.stats_file);
      if (!out) {
        throw IoError("cannot write " + args.stats_file);
      }
      out << stats_json(result.stats).dump(2) << '\n';
    }
  } catch (const IoError &e) {
    std::cerr << e.what() << '\n';
    return kExitIo;
  }
  return result.stats.balanced ? kExitOk : kExitImbalanced;
}

struct BenchArgs {
  std::string suite = "builtin";
  std::string preset = "fast";
  std::string out_dir;
  std::vector<BlockID> ks = {2, 4, 8, 16};
  int reps = 10;
  unsigned workers = 1;
};

/// Every *.graph file of the directory becomes an instance, named by its
/// stem; a sibling <stem>.xyz file supplies coordinates.
std::vector<BenchInstance> load_suite_dir(const std::filesystem::path &dir) {
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".graph") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw IoError("no .graph files in " + dir.string());
  }
  std::vector<BenchInstance> suite;
  for (const auto &file : files) {
    Graph g = read_metis(file.string());
    auto xyz = file;
    xyz.replace_extension(".xyz");
    if (std::filesystem::exists(xyz)) {
      g = g.with_coords(read_coords(xyz.string(), g.n()));
    }
    suite.push_back({file.stem().string(), std::move(g)});
  }
  return suite;
}

int run_bench_cmd(const BenchArgs &args) {
  const auto preset = parse_preset(args.preset);
  if (!preset) {
    std::cerr << "unknown preset '" << args.preset << "'\n";
    return kExitUsage;
  }
  RunConfig cfg = preset_config(*preset);
  cfg.workers = args.workers;
  std::optional<std::filesystem::path> out_dir;
  if (!args.out_dir.empty()) {
    out_dir = args.out_dir;
    std::error_code ec;
    std::filesystem::create_directories(*out_dir, ec);
    if (ec) {
      std::cerr << "cannot create " << args.out_dir << ": " << ec.message()
                << '\n';
      return kExitIo;
    }
  }
  try {
    const std::vector<BenchInstance> suite = args.suite == "builtin"
                                                 ? builtin_suite()
                                                 : load_suite_dir(args.suite);
    const BenchReport report =
        run_bench(suite, args.ks, args.reps, cfg, out_dir);
    std::cout << format_bench(report);
  } catch (const IoError &e) {
    std::cerr << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error &e) {
    std::cerr << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int write_generated(const Graph &g, const std::string &graph_file,
                    const std::string &coords_file) {
  try {
    write_metis(g, graph_file);
    if (!coords_file.empty()) {
      write_coords(g.coords(), coords_file);
    }
  } catch (const IoError &e) {
    std::cerr << e.what() << '\n';
    return kExitIo;
  }
  std::cout << "n=" << g.n() << " m=" << g.m() << " -> " << graph_file
            << '\n';
  return kExitOk;
}

} // namespace

int cli_main(int argc, char **argv) {
  CLI::App app{"multilevel k-way graph partitioner"};
  app.require_subcommand(1);

  PartitionArgs part;
  CLI::App *cmd_part =
      app.add_subcommand("partition", "partition a graph file");
  cmd_part->add_option("input", part.graph_file, "input graph");
  cmd_part->add_option("--graph", part.graph_file, "input graph");
  cmd_part->add_option("-k,--k", part.k, "number of blocks")->required();
  cmd_part->add_option("--preset", part.preset,
                       "minimal, fast or strong (default fast)");
  cmd_part->add_option("--seed", part.seed, "master seed");
  cmd_part->add_option("--epsilon", part.epsilon, "balance slack")
      ->check(CLI::NonNegativeNumber);
  cmd_part->add_option("--workers", part.workers, "worker threads");
  cmd_part->add_option("--coords", part.coords_file, "coordinate file");
  cmd_part->add_option("-o,--out,--output", part.output_file,
                       "partition output (default <graph>.part)");
  cmd_part->add_option("--stats", part.stats_format,
                       "stdout report format, json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_part->add_option("--stats-file", part.stats_file,
                       "also write the JSON stats to this file");
  cmd_part->add_option("--rating", part.rating,
                       "weight, expansion, expansion_star, expansion_star2, "
                       "inner_outer");
  cmd_part->add_option("--matcher", part.matcher, "shem, greedy, gpa");
  cmd_part->add_option("--queue", part.queue,
                       "top_gain, alternate, top_gain_max_load, max_load");
  cmd_part->add_option("--stop-rule", part.stop_rule,
                       "once, no_change, two_no_change");
  cmd_part->add_option("--bfs-depth", part.bfs_depth, "refinement band depth");
  cmd_part->add_option("--local-iterations", part.local_iterations,
                       "band passes per pair refinement");
  cmd_part->add_option("--repeats", part.repeats,
                       "initial partition repetitions");
  cmd_part->add_option("--max-global-iterations", part.max_global,
                       "global refinement iterations per level");
  cmd_part->add_option("--prepart-blocks", part.prepart_blocks,
                       "coarsening prepartition blocks");
  cmd_part->add_option("--alpha-patience", part.alpha_patience,
                       "stop patience as a fraction of the band");

  BenchArgs bench;
  CLI::App *cmd_bench =
      app.add_subcommand("bench", "run a benchmark suite");
  cmd_bench->add_option("--suite", bench.suite,
                        "'builtin' or a directory of .graph files");
  cmd_bench->add_option("--preset", bench.preset, "minimal, fast or strong");
  cmd_bench->add_option("--k-list,--ks", bench.ks, "block counts to test")
      ->delimiter(',');
  cmd_bench->add_option("--reps,--seeds", bench.reps,
                        "seeds per configuration");
  cmd_bench->add_option("--workers", bench.workers, "worker threads");
  cmd_bench->add_option("--out-dir", bench.out_dir,
                        "write every partition into this directory");

  CLI::App *cmd_gen = app.add_subcommand("gen", "generate instances");
  cmd_gen->require_subcommand(1);

  std::string gen_out;
  std::string gen_coords;
  unsigned rgg_exponent = 10;
  std::uint64_t gen_seed = 1;
  CLI::App *cmd_rgg = cmd_gen->add_subcommand("rgg", "random geometric graph");
  cmd_rgg->add_option("output", gen_out, "graph output file")->required();
  cmd_rgg->add_option("--exponent", rgg_exponent, "n = 2^exponent");
  cmd_rgg->add_option("--seed", gen_seed, "generator seed");
  cmd_rgg->add_option("--coords", gen_coords, "coordinate output file");

  std::string grid_out;
  std::string grid_coords;
  NodeID grid_rows = 64;
  NodeID grid_cols = 64;
  CLI::App *cmd_grid = cmd_gen->add_subcommand("grid", "rectangular grid");
  cmd_grid->add_option("output", grid_out, "graph output file")->required();
  cmd_grid->add_option("--rows", grid_rows, "grid rows");
  cmd_grid->add_option("--cols", grid_cols, "grid columns");
  cmd_grid->add_option("--coords", grid_coords, "coordinate output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cmd_part->parsed()) {
    return run_partition(part);
  }
  if (cmd_bench->parsed()) {
    return run_bench_cmd(bench);
  }
  if (cmd_rgg->parsed()) {
    return write_generated(gen_rgg(rgg_exponent, gen_seed), gen_out,
                           gen_coords);
  }
  if (cmd_grid->parsed()) {
    return write_generated(gen_grid(grid_rows, grid_cols), grid_out,
                           grid_coords);
  }
  return kExitUsage;
}

} // namespace mgp
