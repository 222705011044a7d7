#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wordgen/experiment.hpp"
#include "wordgen/learner.hpp"
#include "wordgen/taxonomy.hpp"

namespace wordgen {

struct OutputPaths {
  std::optional<std::filesystem::path> csv;
  std::optional<std::filesystem::path> svg;
  std::optional<std::filesystem::path> trace;

  friend bool operator==(const OutputPaths&, const OutputPaths&) = default;
};

// Everything needed to reproduce a run. Every field has a default, so an
// empty JSON object is a valid config.
struct RunConfig {
  Taxonomy taxonomy = Taxonomy::from_json(default_taxonomy_json());
  Params params;
  std::vector<TrainingKind> conditions{TrainingKind::OneExample, TrainingKind::ThreeSubordinate};
  std::vector<Ablation> ablations{kAllAblations.begin(), kAllAblations.end()};
  TestCounts test_counts = kDefaultTestCounts;
  Timing timing;
  Word word = "fep";
  std::string training_subordinate = "dalmatian";
  OutputPaths output;

  GridOptions grid_options() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// `base_dir` resolves a taxonomy given as a relative file path.
RunConfig parse_config(const Json& doc, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

// Inverse of parse_config; the taxonomy is always written inline.
Json config_to_json(const RunConfig& config);

}  // namespace wordgen
