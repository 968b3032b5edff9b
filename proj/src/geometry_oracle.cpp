#include "bridge/geometry_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "bridge/curve_engine.hpp"
#include "bridge/error.hpp"

namespace bridge::geometry {

namespace {

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

// mpq_class(num, den) does not reduce the fraction.
Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

} // namespace

std::vector<ArcPath> realize(const ArcSystem& arcs) {
  std::vector<int> counts = arcs.crossing_counts();
  auto x_of = [&](const Anchor& a) -> Rational {
    if (a.is_puncture())
      return Rational(a.index);
    return Rational(a.interval) + q(a.index, counts[a.interval - 1] + 1);
  };

  // Heights by nesting depth, computed separately in each hemisphere.
  LinearPositions pos(arcs);
  std::map<std::tuple<int, std::size_t>, int> height; // (label, excursion) -> depth
  for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
    std::vector<std::tuple<long long, int, std::size_t>> ends; // position, label, excursion
    for (const Arc& arc : arcs.arcs())
      for (std::size_t e = 0; e + 1 < arc.anchors.size(); ++e)
        if (arc.hemisphere_of(e) == h) {
          ends.emplace_back(pos.of(arc.anchors[e]), arc.label, e);
          ends.emplace_back(pos.of(arc.anchors[e + 1]), arc.label, e);
        }
    std::sort(ends.begin(), ends.end());
    std::vector<std::pair<std::tuple<int, std::size_t>, int>> stack; // chord, max child depth
    std::set<std::tuple<int, std::size_t>> open;
    for (const auto& [p, label, e] : ends) {
      auto key = std::tuple{label, e};
      if (!open.count(key)) {
        open.insert(key);
        stack.push_back({key, 0});
      } else {
        int depth = stack.back().second + 1;
        height[key] = depth;
        stack.pop_back();
        if (!stack.empty())
          stack.back().second = std::max(stack.back().second, depth);
      }
    }
  }

  const Rational unit = q(1, 3);
  std::vector<ArcPath> out;
  for (const Arc& arc : arcs.arcs()) {
    ArcPath path;
    path.label = arc.label;
    path.path.push_back({x_of(arc.anchors[0]), 0});
    for (std::size_t e = 0; e + 1 < arc.anchors.size(); ++e) {
      Rational y = unit * height.at({arc.label, e});
      if (arc.hemisphere_of(e) == Hemisphere::lower)
        y = -y;
      Rational x0 = x_of(arc.anchors[e]), x1 = x_of(arc.anchors[e + 1]);
      path.path.push_back({x0, y});
      path.path.push_back({x1, y});
      path.path.push_back({x1, 0});
    }
    out.push_back(std::move(path));
  }
  return out;
}

ArcSystem extract(int n, const std::vector<ArcPath>& paths) {
  struct Hit {
    int cycle_part; // 0 for x >= 1, 1 for x < 1: l read from p_1 through infinity
    Rational x;
    std::size_t path, seq;
  };
  std::vector<Hit> hits;
  std::vector<Hemisphere> first(paths.size(), Hemisphere::upper);
  std::vector<std::size_t> crossing_total(paths.size(), 0);

  auto puncture_at = [&](const Point& p) {
    if (p.y != 0 || p.x.get_den() != 1)
      throw bridge_error(errc::invalid_arc_system, "path endpoint is not a puncture");
    long k = p.x.get_num().get_si();
    if (k < 1 || k > 2 * n)
      throw bridge_error(errc::invalid_arc_system, "path endpoint outside 1..2n");
    return static_cast<int>(k);
  };

  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    const Polyline& v = paths[pi].path;
    puncture_at(v.front());
    puncture_at(v.back());
    int cur = 0;
    bool pending = false;
    Rational pending_x;
    std::size_t seq = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      int s = sgn(v[i].y);
      if (s == 0) {
        if (!pending) {
          pending = true;
          pending_x = v[i].x;
        }
        continue;
      }
      if (cur == 0) {
        first[pi] = s > 0 ? Hemisphere::upper : Hemisphere::lower;
      } else if (s != cur) {
        Rational x;
        if (pending) {
          x = pending_x;
        } else {
          const Point& a = v[i - 1];
          const Point& b = v[i];
          x = a.x + (b.x - a.x) * (a.y / (a.y - b.y));
        }
        hits.push_back({x >= 1 ? 0 : 1, x, pi, seq++});
      }
      cur = s;
      pending = false;
    }
    crossing_total[pi] = seq;
  }

  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return std::tie(a.cycle_part, a.x) < std::tie(b.cycle_part, b.x);
  });

  std::vector<std::vector<Anchor>> inner(paths.size());
  for (std::size_t pi = 0; pi < paths.size(); ++pi)
    inner[pi].resize(crossing_total[pi]);
  std::vector<int> rank(2 * n + 1, 0);
  for (const Hit& h : hits) {
    int interval;
    if (h.cycle_part == 1 || h.x > 2 * n) {
      interval = 2 * n;
    } else {
      mpz_class fl = h.x.get_num() / h.x.get_den();
      if (h.x.get_den() == 1)
        throw bridge_error(errc::invalid_arc_system, "path crosses l at a puncture");
      interval = static_cast<int>(fl.get_si());
    }
    inner[h.path][h.seq] = Anchor::crossing(interval, ++rank[interval]);
  }

  std::vector<Arc> arcs;
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    Arc arc;
    arc.label = paths[pi].label;
    arc.first = first[pi];
    arc.anchors.push_back(Anchor::puncture(puncture_at(paths[pi].path.front())));
    arc.anchors.insert(arc.anchors.end(), inner[pi].begin(), inner[pi].end());
    arc.anchors.push_back(Anchor::puncture(puncture_at(paths[pi].path.back())));
    arcs.push_back(std::move(arc));
  }
  return ArcSystem(n, std::move(arcs));
}

HalfTwistMap::HalfTwistMap(int j, int sign) {
  const Point centre{q(2 * j + 1, 2), 0};
  const std::array<Point, 6> base{{{1, 0},
                                   {q(1, 2), q(1, 2)},
                                   {q(-1, 2), q(1, 2)},
                                   {-1, 0},
                                   {q(-1, 2), q(-1, 2)},
                                   {q(1, 2), q(-1, 2)}}};
  constexpr int levels = 4; // level 0 innermost, level 3 the support boundary
  auto vertex = [&](int level, int i) {
    Rational scale = q(3, 4) + q(level, 6);
    const Point& b = base[((i % 6) + 6) % 6];
    return Point{centre.x + scale * b.x, centre.y + scale * b.y};
  };
  // Level k turns by (3 - k) sixths of a full turn, in the direction of sign.
  auto shift = [&](int level) { return sign > 0 ? 3 - level : -(3 - level); };

  for (int i = 0; i < 6; ++i)
    triangles_.push_back({{centre, vertex(0, i), vertex(0, i + 1)},
                          {centre, vertex(0, i + shift(0)), vertex(0, i + 1 + shift(0))}});
  for (int k = 0; k + 1 < levels; ++k) {
    auto A = [&](int i) { return vertex(k, i); };
    auto B = [&](int i) { return vertex(k + 1, i); };
    auto As = [&](int i) { return vertex(k, i + shift(k)); };
    auto Bs = [&](int i) { return vertex(k + 1, i + shift(k + 1)); };
    for (int i = 0; i < 6; ++i) {
      // The quad diagonal is chosen so the image quads share the same
      // combinatorics shifted by one step.
      if (sign > 0) {
        triangles_.push_back({{A(i), A(i + 1), B(i + 1)}, {As(i), As(i + 1), Bs(i + 1)}});
        triangles_.push_back({{A(i), B(i + 1), B(i)}, {As(i), Bs(i + 1), Bs(i)}});
      } else {
        triangles_.push_back({{A(i), A(i + 1), B(i)}, {As(i), As(i + 1), Bs(i)}});
        triangles_.push_back({{A(i + 1), B(i + 1), B(i)}, {As(i + 1), Bs(i + 1), Bs(i)}});
      }
    }
  }
  min_x_ = centre.x - q(5, 4);
  max_x_ = centre.x + q(5, 4);
  min_y_ = q(-5, 8);
  max_y_ = q(5, 8);
}

const HalfTwistMap::Triangle* HalfTwistMap::locate(const Point& p) const {
  if (p.x < min_x_ || p.x > max_x_ || p.y < min_y_ || p.y > max_y_)
    return nullptr;
  for (const Triangle& t : triangles_) {
    int s0 = sgn(cross(sub(t.from[1], t.from[0]), sub(p, t.from[0])));
    int s1 = sgn(cross(sub(t.from[2], t.from[1]), sub(p, t.from[1])));
    int s2 = sgn(cross(sub(t.from[0], t.from[2]), sub(p, t.from[2])));
    bool has_neg = s0 < 0 || s1 < 0 || s2 < 0;
    bool has_pos = s0 > 0 || s1 > 0 || s2 > 0;
    if (!(has_neg && has_pos))
      return &t;
  }
  return nullptr;
}

Point HalfTwistMap::apply(const Triangle& t, const Point& p) {
  Point e1 = sub(t.from[1], t.from[0]);
  Point e2 = sub(t.from[2], t.from[0]);
  Point d = sub(p, t.from[0]);
  Rational det = cross(e1, e2);
  Rational l1 = cross(d, e2) / det;
  Rational l2 = cross(e1, d) / det;
  Rational l0 = 1 - l1 - l2;
  return {l0 * t.to[0].x + l1 * t.to[1].x + l2 * t.to[2].x, l0 * t.to[0].y + l1 * t.to[1].y + l2 * t.to[2].y};
}

Point HalfTwistMap::operator()(const Point& p) const {
  const Triangle* t = locate(p);
  return t ? apply(*t, p) : p;
}

Polyline HalfTwistMap::image(const Polyline& line) const {
  Polyline out;
  if (line.empty())
    return out;
  out.push_back((*this)(line.front()));
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    const Point& P = line[i];
    const Point& Q = line[i + 1];
    Point d = sub(Q, P);
    std::set<Rational> cuts;
    bool may_meet = !(std::max(P.x, Q.x) < min_x_ || std::min(P.x, Q.x) > max_x_ ||
                      std::max(P.y, Q.y) < min_y_ || std::min(P.y, Q.y) > max_y_);
    if (may_meet) {
      for (const Triangle& t : triangles_)
        for (int e = 0; e < 3; ++e) {
          const Point& E0 = t.from[e];
          const Point& E1 = t.from[(e + 1) % 3];
          Point f = sub(E1, E0);
          Point w = sub(E0, P);
          Rational denom = cross(d, f);
          if (denom != 0) {
            Rational s = cross(w, f) / denom;
            Rational u = cross(w, d) / denom;
            if (s > 0 && s < 1 && u >= 0 && u <= 1)
              cuts.insert(s);
          } else if (cross(w, d) == 0) {
            // Collinear: cut where the edge's endpoints fall on the segment.
            Rational len2 = d.x * d.x + d.y * d.y;
            for (const Point& E : {E0, E1}) {
              Point g = sub(E, P);
              Rational s = (g.x * d.x + g.y * d.y) / len2;
              if (s > 0 && s < 1)
                cuts.insert(s);
            }
          }
        }
    }
    for (const Rational& s : cuts)
      out.push_back((*this)(Point{P.x + s * d.x, P.y + s * d.y}));
    out.push_back((*this)(Q));
  }
  return out;
}

bool HalfTwistMap::is_valid_triangulation() const {
  Rational area_from = 0, area_to = 0;
  for (const Triangle& t : triangles_) {
    Rational a = cross(sub(t.from[1], t.from[0]), sub(t.from[2], t.from[0]));
    Rational b = cross(sub(t.to[1], t.to[0]), sub(t.to[2], t.to[0]));
    if (a == 0 || b == 0 || sgn(a) != sgn(b))
      return false;
    area_from += abs(a);
    area_to += abs(b);
  }
  return area_from == area_to;
}

} // namespace bridge::geometry

namespace bridge {

ArcSystem oracle_apply(const ArcSystem& arcs, int j, int sign) {
  if (j < 1 || j > 2 * arcs.n() - 1)
    throw bridge_error(errc::index_out_of_range, "generator index " + std::to_string(j) + " out of range");
  if (sign != 1 && sign != -1)
    throw bridge_error(errc::malformed, "generator sign must be +1 or -1");
  geometry::HalfTwistMap twist(j, sign);
  std::vector<geometry::ArcPath> paths = geometry::realize(arcs);
  for (geometry::ArcPath& p : paths)
    p.path = twist.image(p.path);
  return reduce(geometry::extract(arcs.n(), paths));
}

} // namespace bridge
