#include "render_svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>

namespace warnet::cli {
namespace {

constexpr double kWidth = 900;
constexpr double kHeight = 420;
constexpr double kMarginLeft = 70;
constexpr double kMarginRight = 160;
constexpr double kMarginTop = 40;
constexpr double kMarginBottom = 50;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string num(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.2f", v);
  return buf.data();
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

void render_line_chart(std::ostream& out, const std::string& title, std::span<const ChartSeries> series) {
  double x_min = std::numeric_limits<double>::max();
  double x_max = std::numeric_limits<double>::lowest();
  double y_min = 0.0;
  double y_max = 1.0;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_min > x_max) {
    x_min = 0.0;
    x_max = 1.0;
  }
  if (x_max == x_min) x_max = x_min + 1.0;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kMarginTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kMarginLeft << "\" y=\"24\" font-size=\"15\">" << escape(title) << "</text>\n";
  out << "<line x1=\"" << num(px(x_min)) << "\" y1=\"" << num(py(y_min)) << "\" x2=\"" << num(px(x_max))
      << "\" y2=\"" << num(py(y_min)) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(px(x_min)) << "\" y1=\"" << num(py(y_min)) << "\" x2=\"" << num(px(x_min))
      << "\" y2=\"" << num(py(y_max)) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << num(px(x_min)) << "\" y=\"" << num(py(y_min) + 18) << "\">" << num(x_min) << "</text>\n";
  out << "<text x=\"" << num(px(x_max)) << "\" y=\"" << num(py(y_min) + 18)
      << "\" text-anchor=\"end\">" << num(x_max) << "</text>\n";
  out << "<text x=\"" << num(px(x_min) - 6) << "\" y=\"" << num(py(y_max) + 4)
      << "\" text-anchor=\"end\">" << num(y_max) << "</text>\n";
  out << "<text x=\"" << num(px(x_min) - 6) << "\" y=\"" << num(py(y_min))
      << "\" text-anchor=\"end\">" << num(y_min) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t p = 0; p < series[i].points.size(); ++p) {
      const auto& [x, y] = series[i].points[p];
      out << (p ? " " : "") << num(px(x)) << ',' << num(py(y));
    }
    out << "\"/>\n";
    const double ly = kMarginTop + 16.0 * static_cast<double>(i);
    out << "<line x1=\"" << num(kWidth - kMarginRight + 10) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(kWidth - kMarginRight + 30) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(kWidth - kMarginRight + 35) << "\" y=\"" << num(ly + 4) << "\">"
        << escape(series[i].label) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace warnet::cli
