#pragma once

#include <optional>
#include <string_view>

#include "mgp/runtime.hpp"

namespace mgp {

/// Bundled configurations trading quality for speed.
enum class Preset { Minimal, Fast, Strong };

std::string_view preset_name(Preset p);
std::optional<Preset> parse_preset(std::string_view name);

/// The tuned configuration of a preset; k, seed and workers keep their
/// defaults and are set by the caller.
RunConfig preset_config(Preset p);

} // namespace mgp
