#include "lbi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lbi {

namespace {

constexpr double kCell = 28.0;
constexpr double kMargin = 40.0;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string star(double cx, double cy, double radius) {
  std::ostringstream points;
  for (int k = 0; k < 10; ++k) {
    const double angle = -M_PI / 2 + k * M_PI / 5;
    const double r = k % 2 == 0 ? radius : radius * 0.45;
    points << (k ? " " : "") << cx + r * std::cos(angle) << ',' << cy + r * std::sin(angle);
  }
  return points.str();
}

}  // namespace

std::string render_svg(const std::vector<FigureVertex>& vertices, const std::vector<FigureEdge>& edges,
                       const std::string& title, const std::string& x_label, const std::string& y_label) {
  std::int64_t max_w = 1, max_z = 1;
  for (const auto& v : vertices) {
    max_w = std::max(max_w, v.at.w);
    max_z = std::max(max_z, v.at.z);
  }
  const double width = 2 * kMargin + kCell * static_cast<double>(max_w);
  const double height = 2 * kMargin + kCell * static_cast<double>(max_z) + 20;
  auto px = [&](std::int64_t w) { return kMargin + kCell * static_cast<double>(w); };
  auto py = [&](std::int64_t z) { return height - kMargin - kCell * static_cast<double>(z); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<title>" << escape(title) << "</title>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<g stroke=\"#bbbbbb\" stroke-width=\"0.6\" stroke-dasharray=\"1,3\">\n";
  for (std::int64_t w = 0; w <= max_w; ++w)
    svg << "<line x1=\"" << px(w) << "\" y1=\"" << py(0) << "\" x2=\"" << px(w) << "\" y2=\"" << py(max_z) << "\"/>\n";
  for (std::int64_t z = 0; z <= max_z; ++z)
    svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(z) << "\" x2=\"" << px(max_w) << "\" y2=\"" << py(z) << "\"/>\n";
  svg << "</g>\n";
  svg << "<g stroke=\"black\" stroke-width=\"1.2\">\n";
  svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(max_w) + 12 << "\" y2=\"" << py(0)
      << "\"/>\n";
  svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(max_z) - 12
      << "\"/>\n";
  svg << "</g>\n";
  svg << "<text x=\"" << px(max_w) + 16 << "\" y=\"" << py(0) + 4 << "\" font-size=\"13\">" << escape(x_label)
      << "</text>\n";
  svg << "<text x=\"" << px(0) - 4 << "\" y=\"" << py(max_z) - 16 << "\" font-size=\"13\">" << escape(y_label)
      << "</text>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 8 << "\" font-size=\"13\" text-anchor=\"middle\">"
      << escape(title) << "</text>\n";

  svg << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& e : edges)
    svg << "<line x1=\"" << px(e.from.w) << "\" y1=\"" << py(e.from.z) << "\" x2=\"" << px(e.to.w) << "\" y2=\""
        << py(e.to.z) << "\"/>\n";
  svg << "</g>\n";

  for (const auto& v : vertices) {
    if (v.infinite) {
      svg << "<circle class=\"infinite\" cx=\"" << px(v.at.w) << "\" cy=\"" << py(v.at.z)
          << "\" r=\"4\" fill=\"black\"/>\n";
    } else {
      svg << "<polygon class=\"finite\" points=\"" << star(px(v.at.w), py(v.at.z), 6.5)
          << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lbi
