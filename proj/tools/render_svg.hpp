#pragma once

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace warnet::cli {

struct ChartSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y), x ascending
};

/// Minimal SVG line chart: axes, min/max tick labels, one polyline per series.
void render_line_chart(std::ostream& out, const std::string& title, std::span<const ChartSeries> series);

}  // namespace warnet::cli
