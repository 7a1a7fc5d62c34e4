#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "common.hpp"
#include "mgp/bench.hpp"
#include "mgp/cli.hpp"
#include "mgp/io.hpp"
#include "mgp/presets.hpp"

using namespace mgp;

namespace {

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("mgp_bench_test_" + std::to_string(counter++));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string file(const std::string &name) const {
    return (path / name).string();
  }
};

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mgp");
  std::vector<char *> argv;
  argv.reserve(args.size());
  for (std::string &a : args) {
    argv.push_back(a.data());
  }
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

} // namespace

TEST_CASE("geometric mean matches hand computations") {
  const std::vector<double> a = {4.0, 9.0};
  CHECK(geometric_mean(a) == doctest::Approx(6.0));
  const std::vector<double> b = {5.0};
  CHECK(geometric_mean(b) == doctest::Approx(5.0));
  const std::vector<double> c = {2.0, 0.5};
  CHECK(geometric_mean(c) == doctest::Approx(1.0));
  CHECK_THROWS_AS(geometric_mean(std::vector<double>{}), std::domain_error);
  const std::vector<double> bad = {1.0, 0.0};
  CHECK_THROWS_AS(geometric_mean(bad), std::domain_error);
}

TEST_CASE("every preset shares the tuned coarsening setup") {
  for (const Preset p : {Preset::Minimal, Preset::Fast, Preset::Strong}) {
    const RunConfig cfg = preset_config(p);
    CHECK(cfg.coarsen.rating == RatingKind::ExpansionStar2);
    CHECK(cfg.coarsen.matcher == MatcherKind::Gpa);
    CHECK(cfg.coarsen.alpha_contraction == 60.0);
    CHECK(cfg.refine.queue == QueueStrategy::TopGain);
    CHECK(cfg.epsilon == 0.03);
    CHECK(cfg.prepart_blocks == 8);
    CHECK(cfg.workers == 1);
  }
}

TEST_CASE("the minimal preset is a single cheap sweep") {
  const RunConfig cfg = preset_config(Preset::Minimal);
  CHECK(cfg.init.repeats == 1);
  CHECK(cfg.refine.bfs_depth == 1);
  CHECK(cfg.refine.local_iterations == 1);
  CHECK(cfg.refine.alpha_patience == 0.01);
  CHECK(cfg.stop_rule == StopRule::Once);
  CHECK(cfg.max_global_iterations == 1);
}

TEST_CASE("the fast preset is the default middle ground") {
  const RunConfig cfg = preset_config(Preset::Fast);
  CHECK(cfg.init.repeats == 3);
  CHECK(cfg.refine.bfs_depth == 5);
  CHECK(cfg.refine.local_iterations == 3);
  CHECK(cfg.refine.alpha_patience == 0.05);
  CHECK(cfg.stop_rule == StopRule::NoChange);
  CHECK(cfg.max_global_iterations == 15);
}

TEST_CASE("the strong preset searches widest") {
  const RunConfig cfg = preset_config(Preset::Strong);
  CHECK(cfg.init.repeats == 5);
  CHECK(cfg.refine.bfs_depth == 20);
  CHECK(cfg.refine.local_iterations == 5);
  CHECK(cfg.refine.alpha_patience == 0.20);
  CHECK(cfg.stop_rule == StopRule::TwoNoChange);
  CHECK(cfg.max_global_iterations == 15);
}

TEST_CASE("preset names round trip") {
  for (const Preset p : {Preset::Minimal, Preset::Fast, Preset::Strong}) {
    CHECK(parse_preset(preset_name(p)) == p);
  }
  CHECK(!parse_preset("bogus").has_value());
}

TEST_CASE("the builtin suite holds the five reference instances") {
  const std::vector<BenchInstance> suite = builtin_suite();
  REQUIRE(suite.size() == 5);
  const std::vector<std::string> names = {"rgg10", "rgg12", "grid64",
                                          "grid100", "twocomm"};
  const std::vector<NodeID> sizes = {1024, 4096, 4096, 10000, 2000};
  for (std::size_t i = 0; i < suite.size(); ++i) {
    CHECK(suite[i].name == names[i]);
    CHECK(suite[i].graph.n() == sizes[i]);
    CHECK(suite[i].graph.m() > 0);
  }
}

TEST_CASE("bench rows aggregate exactly the partitions they wrote") {
  TempDir dir;
  std::vector<BenchInstance> suite;
  suite.push_back({"pa", test::unit_path(16)});
  suite.push_back({"cy", test::cycle_graph(16)});
  const std::vector<BlockID> ks = {2, 3};
  const int reps = 2;
  const BenchReport report = run_bench(suite, ks, reps,
                                       preset_config(Preset::Minimal),
                                       dir.path);

  REQUIRE(report.rows.size() == 4);
  std::vector<double> avg_cuts;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const BenchRow &row = report.rows[i];
    CHECK(row.instance == suite[i / ks.size()].name);
    CHECK(row.k == ks[i % ks.size()]);
    CHECK(row.runs == reps);
    const Graph &g = suite[i / ks.size()].graph;

    double cut_sum = 0.0;
    EdgeWeight best = 0;
    for (int s = 1; s <= reps; ++s) {
      const std::string file = dir.file(row.instance + ".k" +
                                       std::to_string(row.k) + ".s" +
                                       std::to_string(s) + ".part");
      REQUIRE(std::filesystem::exists(file));
      const auto blocks = read_partition(file, g.n());
      const EdgeWeight cut = cut_weight(g, blocks);
      cut_sum += static_cast<double>(cut);
      best = s == 1 ? cut : std::min(best, cut);
      for (const BlockID b : blocks) {
        CHECK(b >= 0);
        CHECK(b < row.k);
      }
    }
    CHECK(row.avg_cut == doctest::Approx(cut_sum / reps).epsilon(1e-12));
    CHECK(row.best_cut == best);
    CHECK(row.balanced_runs >= 0);
    CHECK(row.balanced_runs <= reps);
    CHECK(row.avg_balance > 0.0);
    CHECK(row.avg_seconds >= 0.0);
    avg_cuts.push_back(row.avg_cut);
  }
  CHECK(report.geo_mean_avg_cut ==
        doctest::Approx(geometric_mean(avg_cuts)).epsilon(1e-12));
  const std::string table = format_bench(report);
  CHECK(table.find("pa") != std::string::npos);
  CHECK(table.find("geometric mean") != std::string::npos);
}

TEST_CASE("the partition command reports usage and io errors") {
  TempDir dir;
  const std::string graph = dir.file("p.graph");
  write_metis(test::unit_path(16), graph);

  CHECK(run_cli({"partition", dir.file("missing.graph"), "-k", "2"}) == 2);
  CHECK(run_cli({"partition", graph, "-k", "2", "--preset", "bogus"}) == 1);
  CHECK(run_cli({"partition", graph, "-k", "99"}) == 1);
  CHECK(run_cli({"partition", graph}) == 1); // -k is required
  CHECK(run_cli({"partition", graph, "-k", "2", "--epsilon", "-0.5"}) == 1);
  CHECK(run_cli({"partition", graph, "-k", "2", "--stats", "yaml"}) == 1);
  CHECK(run_cli({"partition", "-k", "2"}) == 1); // no input graph
  CHECK(run_cli({"nonsense"}) == 1);
}

TEST_CASE("a successful partition run writes its outputs") {
  TempDir dir;
  const std::string graph = dir.file("p.graph");
  write_metis(test::unit_path(16), graph);
  const std::string out = dir.file("p.part");
  const std::string stats = dir.file("stats.json");

  CHECK(run_cli({"partition", graph, "-k", "2", "--out", out, "--seed", "3",
                 "--stats-file", stats}) == 0);
  const auto blocks = read_partition(out, 16);
  for (const BlockID b : blocks) {
    CHECK(b >= 0);
    CHECK(b < 2);
  }

  std::ifstream in(stats);
  const nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j.contains("cut"));
  CHECK(j.contains("imbalance"));
  CHECK(j.contains("l_max"));
  CHECK(j["seconds_per_phase"].contains("coarsen"));
  CHECK(j["seconds_per_phase"].contains("initial"));
  CHECK(j["seconds_per_phase"].contains("refine"));
  CHECK(j["seconds_per_phase"].contains("total"));
  CHECK(j["seed"] == 3);
  CHECK(j["imbalance"] == 0);
}

TEST_CASE("the default output lands next to the input graph") {
  TempDir dir;
  const std::string graph = dir.file("d.graph");
  write_metis(test::cycle_graph(12), graph);
  CHECK(run_cli({"partition", graph, "-k", "2"}) == 0);
  CHECK(std::filesystem::exists(graph + ".part"));
}

TEST_CASE("the generators produce loadable files through the cli") {
  TempDir dir;
  const std::string rgg = dir.file("r.graph");
  const std::string xyz = dir.file("r.xyz");
  CHECK(run_cli({"gen", "rgg", rgg, "--exponent", "6", "--seed", "2",
                 "--coords", xyz}) == 0);
  const Graph g = read_metis(rgg);
  CHECK(g.n() == 64);
  CHECK(read_coords(xyz, 64).size() == 64);

  const std::string grid = dir.file("g.graph");
  CHECK(run_cli({"gen", "grid", grid, "--rows", "3", "--cols", "4"}) == 0);
  const Graph h = read_metis(grid);
  CHECK(h.n() == 12);
  CHECK(h.m() == 3 * 3 + 4 * 2);
}

TEST_CASE("the bench command runs directory suites end to end") {
  TempDir dir;
  const std::string suite_dir = dir.file("suite");
  std::filesystem::create_directories(suite_dir);
  write_metis(test::unit_path(12),
              std::filesystem::path(suite_dir) / "tiny.graph");
  const std::string out_dir = dir.file("parts");

  CHECK(run_cli({"bench", "--suite", suite_dir, "--k-list", "2", "--reps",
                 "1", "--preset", "minimal", "--out-dir", out_dir}) == 0);
  CHECK(std::filesystem::exists(std::filesystem::path(out_dir) /
                                "tiny.k2.s1.part"));

  const std::string empty_dir = dir.file("empty");
  std::filesystem::create_directories(empty_dir);
  CHECK(run_cli({"bench", "--suite", empty_dir}) == 2);
  CHECK(run_cli({"bench", "--preset", "bogus"}) == 1);
}
