#pragma once

#include <string>
#include <vector>

#include "bridge/arc_system.hpp"

namespace bridge {

struct RenderOptions {
  double min_interval_width = 60.0; // px
  double crossing_spacing = 8.0;    // px between neighbouring crossings
  double margin = 20.0;
  bool show_labels = true;
  std::string title;
};

/// A drawn excursion: a half circle over [x_left, x_right] on the given side.
struct DrawnExcursion {
  int label = 0;
  Hemisphere side = Hemisphere::upper;
  double x_left = 0, x_right = 0;
};

/// Horizontal coordinate assigned to every anchor, in px. Punctures sit at
/// interval boundaries; crossings are evenly spaced inside their interval.
class RenderLayout {
public:
  RenderLayout(const ArcSystem& arcs, const RenderOptions& options);

  double x(const Anchor& a) const;
  double puncture_x(int k) const { return puncture_x_.at(k - 1); }
  double right_end() const { return right_end_; }

private:
  std::vector<double> puncture_x_;
  std::vector<double> spacing_;
  double right_end_ = 0;
};

std::vector<DrawnExcursion> layout_excursions(const ArcSystem& arcs, const RenderOptions& options = {});

/// SVG 1.1 document, byte-identical for identical input.
std::string render_svg(const ArcSystem& arcs, const RenderOptions& options = {});

} // namespace bridge
