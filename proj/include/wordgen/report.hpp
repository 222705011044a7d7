#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "wordgen/experiment.hpp"

namespace wordgen {

// Header `condition,presentation,ablation,match_level,p_gen,raw_mean`, one
// row per (cell, match level). Grids are written in the order given, cells
// by condition then presentation, levels from subordinate to superordinate.
// p_gen is fixed-point with 6 decimals; raw_mean uses 6-decimal scientific
// notation because object probabilities are far below 1e-6.
std::string csv_text(std::span<const GridResult> grids);
void emit_csv(std::span<const GridResult> grids, const std::filesystem::path& path);

// Grouped bar charts, one per (ablation, presentation), bars for each match
// level within each training condition. The y axis spans [0, 1]; larger
// values are clipped at the top.
std::string svg_text(std::span<const GridResult> grids);
void emit_svg(std::span<const GridResult> grids, const std::filesystem::path& path);

// {"<ablation>/<condition>/<presentation>": ledger, ...}
Json trace_json(std::span<const GridResult> grids);
void emit_trace(std::span<const GridResult> grids, const std::filesystem::path& path);

}  // namespace wordgen
