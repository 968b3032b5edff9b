#pragma once

#include <array>
#include <vector>

#include <gmpxx.h>

#include "bridge/arc_system.hpp"

// Independent exact-geometry route for the braid action: arcs become
// polylines with rational vertices, a piecewise-linear homeomorphism realizes
// the half-twist, and crossings with l are read back from the image.

namespace bridge::geometry {

using Rational = mpq_class;

struct Point {
  Rational x, y;

  friend bool operator==(const Point&, const Point&) = default;
};

using Polyline = std::vector<Point>;

struct ArcPath {
  int label = 0;
  Polyline path; // from the arc's first anchor to its last
};

/// Embeds a system in the plane: punctures at (k, 0), crossings spread evenly
/// inside their interval (interval 2n to the right of p_2n), each excursion a
/// three-segment box chord whose height grows with its nesting depth.
std::vector<ArcPath> realize(const ArcSystem& arcs);

/// Reads normal-form data back from polylines by locating sign changes of y.
/// Does not reduce.
ArcSystem extract(int n, const std::vector<ArcPath>& paths);

/// A piecewise-linear half-twist supported on a hexagonal disk centred at
/// (j + 1/2, 0). Inside the innermost hexagon it is the point reflection
/// through the centre; three triangulated collars interpolate to the identity.
class HalfTwistMap {
public:
  HalfTwistMap(int j, int sign);

  Point operator()(const Point& p) const;

  /// Exact image: the polyline is split along the triangulation edges and
  /// each piece mapped affinely.
  Polyline image(const Polyline& line) const;

  /// Every image triangle is non-degenerate with the domain's orientation and
  /// the image triangles have the same total area as the domain ones.
  bool is_valid_triangulation() const;

private:
  struct Triangle {
    std::array<Point, 3> from;
    std::array<Point, 3> to;
  };

  const Triangle* locate(const Point& p) const;
  static Point apply(const Triangle& t, const Point& p);

  std::vector<Triangle> triangles_;
  Rational min_x_, max_x_, min_y_, max_y_;
};

} // namespace bridge::geometry

namespace bridge {

/// Same contract as apply_generator, computed through exact geometry.
ArcSystem oracle_apply(const ArcSystem& arcs, int j, int sign);

} // namespace bridge
