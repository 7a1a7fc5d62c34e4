#include "mgp/presets.hpp"

namespace mgp {

std::string_view preset_name(Preset p) {
  switch (p) {
  case Preset::Minimal:
    return "minimal";
  case Preset::Fast:
    return "fast";
  case Preset::Strong:
    return "strong";
  }
  return "fast";
}

std::optional<Preset> parse_preset(std::string_view name) {
  if (name == "minimal") {
    return Preset::Minimal;
  }
  if (name == "fast") {
    return Preset::Fast;
  }
  if (name == "strong") {
    return Preset::Strong;
  }
  return std::nullopt;
}

RunConfig preset_config(Preset p) {
  RunConfig cfg;
  cfg.coarsen.rating = RatingKind::ExpansionStar2;
  cfg.coarsen.matcher = MatcherKind::Gpa;
  cfg.coarsen.alpha_contraction = 60.0;
  cfg.refine.queue = QueueStrategy::TopGain;
  switch (p) {
  case Preset::Minimal:
    cfg.init.repeats = 1;
    cfg.refine.bfs_depth = 1;
    cfg.refine.local_iterations = 1;
    cfg.refine.alpha_patience = 0.01;
    cfg.stop_rule = StopRule::Once;
    cfg.max_global_iterations = 1;
    break;
  case Preset::Fast:
    cfg.init.repeats = 3;
    cfg.refine.bfs_depth = 5;
    cfg.refine.local_iterations = 3;
    cfg.refine.alpha_patience = 0.05;
    cfg.stop_rule = StopRule::NoChange;
    cfg.max_global_iterations = 15;
    break;
  case Preset::Strong:
    cfg.init.repeats = 5;
    cfg.refine.bfs_depth = 20;
    cfg.refine.local_iterations = 5;
    cfg.refine.alpha_patience = 0.20;
    cfg.stop_rule = StopRule::TwoNoChange;
    cfg.max_global_iterations = 15;
    break;
  }
  return cfg;
}

} // namespace mgp
