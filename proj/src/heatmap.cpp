#include "clustnet/heatmap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace clustnet {

namespace {

struct Rgb {
  double r, g, b;
};

// Anchors of a perceptually ordered dark-blue to yellow ramp.
constexpr std::array<Rgb, 5> kRamp{{{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};

std::string colour_at(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * static_cast<double>(kRamp.size() - 1);
  const auto k = std::min(static_cast<std::size_t>(pos), kRamp.size() - 2);
  const double f = pos - static_cast<double>(k);
  const Rgb& a = kRamp[k];
  const Rgb& b = kRamp[k + 1];
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(a.r + f * (b.r - a.r))),
                static_cast<int>(std::lround(a.g + f * (b.g - a.g))), static_cast<int>(std::lround(a.b + f * (b.b - a.b))));
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::optional<std::pair<double, double>> shared_log_range(const std::vector<const HeatmapData*>& maps) {
  double lo = INFINITY;
  double hi = 0.0;
  for (const auto* map : maps) {
    for (const auto& row : map->values) {
      for (double v : row) {
        if (std::isfinite(v) && v > 0.0) {
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
      }
    }
  }
  if (!(hi > 0.0)) return std::nullopt;
  return std::pair{lo, hi};
}

std::string render_heatmap_svg(const HeatmapData& map, std::pair<double, double> range, const std::string& comment) {
  const std::size_t rows = map.values.size();
  const std::size_t cols = rows ? map.values[0].size() : 0;
  if (rows == 0 || cols == 0) throw std::invalid_argument("heatmap needs at least one cell");
  if (map.x_ticks.size() != cols || map.y_ticks.size() != rows) throw std::invalid_argument("heatmap ticks do not match grid");
  if (!(range.first > 0.0 && range.second >= range.first)) throw std::invalid_argument("heatmap colour range must be positive");

  constexpr int cell = 40;
  constexpr int left = 80;
  constexpr int top = 40;
  constexpr int bar = 20;
  const int grid_w = static_cast<int>(cols) * cell;
  const int grid_h = static_cast<int>(rows) * cell;
  const int width = left + grid_w + 30 + bar + 80;
  const int height = top + grid_h + 70;

  const double log_lo = std::log(range.first);
  const double log_span = std::log(range.second) - log_lo;
  auto scale = [&](double v) { return log_span > 0.0 ? (std::log(v) - log_lo) / log_span : 0.5; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  if (!comment.empty()) {
    std::string safe = comment;
    for (std::size_t p = safe.find("--"); p != std::string::npos; p = safe.find("--", p)) safe.replace(p, 2, "- -");
    svg << "<!-- " << safe << " -->\n";
  }
  svg << "<text x=\"" << left + grid_w / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << escape(map.title)
      << "</text>\n";
  for (std::size_t r = 0; r < rows; ++r) {
    const int y = top + static_cast<int>(rows - 1 - r) * cell;
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = map.values[r][c];
      const std::string fill = (std::isfinite(v) && v > 0.0) ? colour_at(scale(v)) : "#bbbbbb";
      svg << "<rect x=\"" << left + static_cast<int>(c) * cell << "\" y=\"" << y << "\" width=\"" << cell
          << "\" height=\"" << cell << "\" fill=\"" << fill << "\"><title>" << tick(v) << "</title></rect>\n";
    }
    svg << "<text x=\"" << left - 4 << "\" y=\"" << y + cell / 2 + 4 << "\" text-anchor=\"end\">" << tick(map.y_ticks[r])
        << "</text>\n";
  }
  for (std::size_t c = 0; c < cols; ++c) {
    const int x = left + static_cast<int>(c) * cell + cell / 2;
    svg << "<text x=\"" << x << "\" y=\"" << top + grid_h + 14 << "\" text-anchor=\"end\" transform=\"rotate(-45 " << x
        << ' ' << top + grid_h + 14 << ")\">" << tick(map.x_ticks[c]) << "</text>\n";
  }
  svg << "<text x=\"" << left + grid_w / 2 << "\" y=\"" << height - 6 << "\" text-anchor=\"middle\">" << escape(map.x_label)
      << "</text>\n";
  svg << "<text x=\"14\" y=\"" << top + grid_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << top + grid_h / 2 << ")\">" << escape(map.y_label) << "</text>\n";

  // Colour bar, log scale, bottom = range.first.
  const int bar_x = left + grid_w + 30;
  constexpr int steps = 32;
  for (int k = 0; k < steps; ++k) {
    const double t = (static_cast<double>(k) + 0.5) / steps;
    const int y = top + grid_h - (k + 1) * grid_h / steps;
    svg << "<rect x=\"" << bar_x << "\" y=\"" << y << "\" width=\"" << bar << "\" height=\"" << grid_h / steps + 1
        << "\" fill=\"" << colour_at(t) << "\"/>\n";
  }
  svg << "<text x=\"" << bar_x + bar + 4 << "\" y=\"" << top + grid_h << "\">" << tick(range.first) << "</text>\n";
  svg << "<text x=\"" << bar_x + bar + 4 << "\" y=\"" << top + 10 << "\">" << tick(range.second) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace clustnet
