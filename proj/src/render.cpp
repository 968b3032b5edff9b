#include "bridge/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace bridge {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

constexpr std::array<const char*, 8> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                             "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
constexpr std::array<const char*, 3> dashes{"none", "6 3", "2 2"};

} // namespace

RenderLayout::RenderLayout(const ArcSystem& arcs, const RenderOptions& options) {
  std::vector<int> counts = arcs.crossing_counts();
  double x = options.margin;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    puncture_x_.push_back(x);
    double width = std::max(options.min_interval_width, options.crossing_spacing * (counts[t] + 1));
    spacing_.push_back(width / (counts[t] + 1));
    x += width;
  }
  right_end_ = x;
}

double RenderLayout::x(const Anchor& a) const {
  if (a.is_puncture())
    return puncture_x_.at(a.index - 1);
  return puncture_x_.at(a.interval - 1) + spacing_.at(a.interval - 1) * a.index;
}

std::vector<DrawnExcursion> layout_excursions(const ArcSystem& arcs, const RenderOptions& options) {
  RenderLayout layout(arcs, options);
  std::vector<DrawnExcursion> out;
  for (const Arc& arc : arcs.arcs())
    for (const Excursion& e : arc.excursions()) {
      double a = layout.x(e.start), b = layout.x(e.end);
      out.push_back({arc.label, e.hemisphere, std::min(a, b), std::max(a, b)});
    }
  return out;
}

std::string render_svg(const ArcSystem& arcs, const RenderOptions& options) {
  RenderLayout layout(arcs, options);

  double max_radius = 20.0;
  for (const DrawnExcursion& e : layout_excursions(arcs, options))
    max_radius = std::max(max_radius, (e.x_right - e.x_left) / 2);
  const double width = layout.right_end() + options.margin;
  const double axis_y = max_radius + options.margin + (options.title.empty() ? 0 : 20);
  const double height = axis_y + max_radius + options.margin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  if (!options.title.empty())
    svg << "  <text x=\"" << fmt(options.margin) << "\" y=\"" << fmt(options.margin) << "\" font-size=\"14\">"
        << options.title << "</text>\n";

  // l, with the lower segments L_i emphasised.
  svg << "  <g id=\"l\">\n";
  svg << "    <line x1=\"0\" y1=\"" << fmt(axis_y) << "\" x2=\"" << fmt(width) << "\" y2=\"" << fmt(axis_y)
      << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  for (int i = 1; i <= arcs.n(); ++i)
    svg << "    <line x1=\"" << fmt(layout.puncture_x(2 * i - 1)) << "\" y1=\"" << fmt(axis_y) << "\" x2=\""
        << fmt(layout.puncture_x(2 * i)) << "\" y2=\"" << fmt(axis_y)
        << "\" stroke=\"#444444\" stroke-width=\"4\"/>\n";
  svg << "  </g>\n";

  svg << "  <g id=\"arcs\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (const Arc& arc : arcs.arcs()) {
    const char* colour = palette[(arc.label - 1) % palette.size()];
    const char* dash = dashes[((arc.label - 1) / palette.size()) % dashes.size()];
    svg << "    <path data-label=\"" << arc.label << "\" stroke=\"" << colour << "\"";
    if (std::string(dash) != "none")
      svg << " stroke-dasharray=\"" << dash << "\"";
    svg << " d=\"M " << fmt(layout.x(arc.anchors.front())) << " " << fmt(axis_y);
    for (const Excursion& e : arc.excursions()) {
      double from = layout.x(e.start), to = layout.x(e.end);
      double r = std::abs(to - from) / 2;
      bool rightward = to > from;
      // Screen y points down: sweep 1 from left to right passes above the axis.
      int sweep = (e.hemisphere == Hemisphere::upper) == rightward ? 1 : 0;
      svg << " A " << fmt(r) << " " << fmt(r) << " 0 0 " << sweep << " " << fmt(to) << " " << fmt(axis_y);
    }
    svg << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"punctures\">\n";
  for (int k = 1; k <= 2 * arcs.n(); ++k) {
    svg << "    <circle cx=\"" << fmt(layout.puncture_x(k)) << "\" cy=\"" << fmt(axis_y)
        << "\" r=\"3\" fill=\"#000000\"/>\n";
    if (options.show_labels)
      svg << "    <text x=\"" << fmt(layout.puncture_x(k) - 4) << "\" y=\"" << fmt(axis_y + 16)
          << "\" font-size=\"10\">p" << k << "</text>\n";
  }
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

} // namespace bridge
