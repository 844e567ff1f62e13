#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace clustnet {

/// Rectangular grid of cell values for an SVG heatmap. values[row][col]; row 0 is drawn at
/// the bottom so the vertical axis increases upward.
struct HeatmapData {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x_ticks;  // one per column
  std::vector<double> y_ticks;  // one per row
  std::vector<std::vector<double>> values;
};

/// Positive (lo, hi) range spanning every positive finite value of all maps, or nothing when
/// no map holds a positive value.
std::optional<std::pair<double, double>> shared_log_range(const std::vector<const HeatmapData*>& maps);

/// Renders the map with a logarithmic colour scale over [range.first, range.second].
/// Non-positive or non-finite cells are drawn grey. The comment, when non-empty, is embedded
/// as an XML comment after the root element opens.
std::string render_heatmap_svg(const HeatmapData& map, std::pair<double, double> range, const std::string& comment);

}  // namespace clustnet
