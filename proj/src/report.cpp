#include "wordgen/report.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

#include "wordgen/error.hpp"

namespace wordgen {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot write '{}'", path.string()));
  out << text;
  if (!out.flush()) throw Error(fmt::format("failed writing '{}'", path.string()));
}

// Chart geometry, in SVG user units.
constexpr double kChartW = 360, kChartH = 240;
constexpr double kLeft = 48, kRight = 16, kTop = 32, kBottom = 40;
constexpr double kPlotW = kChartW - kLeft - kRight, kPlotH = kChartH - kTop - kBottom;
constexpr double kBarW = 22, kBarGap = 4;
constexpr double kLegendH = 28;

constexpr std::array<std::string_view, 3> kBarColors = {"#7b3294", "#e08214", "#1b7837"};

std::string chart_svg(const GridResult& grid, Presentation p, double x0, double y0) {
  std::string s = fmt::format(R"~(<g class="chart" data-ablation="{}" data-presentation="{}" transform="translate({:.1f},{:.1f})">)~"
                              "\n",
                              ablation_name(grid.ablation), presentation_name(p), x0, y0);
  s += fmt::format(R"(<text x="{:.1f}" y="18" text-anchor="middle" font-size="13">{} / {}</text>)" "\n",
                   kChartW / 2, ablation_name(grid.ablation), presentation_name(p));
  // Axes and ticks.
  s += fmt::format(R"(<line x1="{0:.1f}" y1="{1:.1f}" x2="{0:.1f}" y2="{2:.1f}" stroke="black"/>)" "\n", kLeft,
                   kTop, kTop + kPlotH);
  s += fmt::format(R"(<line x1="{0:.1f}" y1="{1:.1f}" x2="{2:.1f}" y2="{1:.1f}" stroke="black"/>)" "\n", kLeft,
                   kTop + kPlotH, kLeft + kPlotW);
  for (double tick : {0.0, 0.5, 1.0}) {
    const double y = kTop + kPlotH * (1.0 - tick);
    s += fmt::format(R"(<text x="{:.1f}" y="{:.1f}" text-anchor="end" font-size="10">{:.1f}</text>)" "\n",
                     kLeft - 6, y + 3, tick);
  }

  std::vector<const CellResult*> cells;
  for (const CellResult& c : grid.cells)
    if (c.presentation == p) cells.push_back(&c);
  const double group_w = cells.empty() ? kPlotW : kPlotW / static_cast<double>(cells.size());
  const double bars_w = 3 * kBarW + 2 * kBarGap;

  for (std::size_t i = 0; i < cells.size(); ++i) {
    const double gx = kLeft + group_w * static_cast<double>(i) + (group_w - bars_w) / 2;
    for (MatchLevel m : kAllMatches) {
      const auto mi = static_cast<std::size_t>(m);
      const double value = cells[i]->result.p_gen[m];
      const double h = kPlotH * std::clamp(value, 0.0, 1.0);
      s += fmt::format(
          R"(<rect class="bar" data-condition="{}" data-match="{}" data-value="{:.6f}" x="{:.2f}" y="{:.2f}" width="{:.2f}" height="{:.2f}" fill="{}"/>)"
          "\n",
          training_name(cells[i]->training), match_name(m), value, gx + mi * (kBarW + kBarGap), kTop + kPlotH - h,
          kBarW, h, kBarColors[mi]);
    }
    s += fmt::format(R"(<text x="{:.2f}" y="{:.1f}" text-anchor="middle" font-size="11">{}</text>)" "\n",
                     gx + bars_w / 2, kTop + kPlotH + 16, training_name(cells[i]->training));
  }
  s += "</g>\n";
  return s;
}

}  // namespace

std::string csv_text(std::span<const GridResult> grids) {
  std::string out = "condition,presentation,ablation,match_level,p_gen,raw_mean\n";
  for (const GridResult& grid : grids)
    for (const CellResult& cell : grid.cells)
      for (MatchLevel m : kAllMatches)
        out += fmt::format("{},{},{},{},{:.6f},{:.6e}\n", training_name(cell.training),
                           presentation_name(cell.presentation), ablation_name(cell.ablation), match_name(m),
                           cell.result.p_gen[m], cell.result.raw_means[m]);
  return out;
}

void emit_csv(std::span<const GridResult> grids, const std::filesystem::path& path) {
  write_file(path, csv_text(grids));
}

std::string svg_text(std::span<const GridResult> grids) {
  const double width = kChartW * kAllPresentations.size();
  const double height = kChartH * static_cast<double>(grids.size()) + kLegendH;
  std::string s = fmt::format(
      R"(<svg xmlns="http://www.w3.org/2000/svg" width="{0:.0f}" height="{1:.0f}" viewBox="0 0 {0:.0f} {1:.0f}" font-family="sans-serif">)"
      "\n",
      width, height);
  s += fmt::format(R"(<rect width="{:.0f}" height="{:.0f}" fill="white"/>)" "\n", width, height);
  for (std::size_t row = 0; row < grids.size(); ++row)
    for (std::size_t col = 0; col < kAllPresentations.size(); ++col)
      s += chart_svg(grids[row], kAllPresentations[col], kChartW * static_cast<double>(col),
                     kChartH * static_cast<double>(row));

  const double ly = kChartH * static_cast<double>(grids.size()) + 8;
  for (MatchLevel m : kAllMatches) {
    const auto mi = static_cast<std::size_t>(m);
    const double lx = kLeft + 130.0 * static_cast<double>(mi);
    s += fmt::format(R"(<rect x="{:.1f}" y="{:.1f}" width="12" height="12" fill="{}"/>)" "\n", lx, ly, kBarColors[mi]);
    s += fmt::format(R"(<text x="{:.1f}" y="{:.1f}" font-size="11">{} match</text>)" "\n", lx + 16, ly + 10,
                     match_name(m));
  }
  s += "</svg>\n";
  return s;
}

void emit_svg(std::span<const GridResult> grids, const std::filesystem::path& path) {
  write_file(path, svg_text(grids));
}

Json trace_json(std::span<const GridResult> grids) {
  Json out = Json::object();
  for (const GridResult& grid : grids)
    for (const CellResult& cell : grid.cells)
      out[fmt::format("{}/{}/{}", ablation_name(cell.ablation), training_name(cell.training),
                      presentation_name(cell.presentation))] = cell.ledger;
  return out;
}

void emit_trace(std::span<const GridResult> grids, const std::filesystem::path& path) {
  write_file(path, trace_json(grids).dump(2) + "\n");
}

}  // namespace wordgen
