#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "iconrate/assigner.hpp"
#include "iconrate/sublexical.hpp"

namespace iconrate {

/// Pipeline settings from a JSON object. Recognized keys: tau,
/// handshape_prefilter, bands (list of [lower, upper] with null for an open
/// upper end), clamp_floor, resample_len, wordvec_path, corpus_path. Any
/// other key is rejected. Missing keys keep their defaults.
struct PipelineConfig {
  AssignConfig assign;
  ExtractOptions extract;
  std::optional<std::filesystem::path> wordvec_path;
  std::optional<std::filesystem::path> corpus_path;
};

PipelineConfig parse_config(std::string_view json_text);
PipelineConfig load_config(const std::filesystem::path& path);

}  // namespace iconrate
