#pragma once

#include <vector>

#include "bridge/arc_system.hpp"

namespace bridge {

/// Mutable working form of an arc system: the points of l in a cyclic doubly
/// linked list, plus the chord partner of every point in each hemisphere.
/// Arcs are the paths obtained by following chords with alternating sides.
///
/// Used by the curve engine; not thread-safe, not meant to outlive a single
/// computation.
class ChordState {
public:
  explicit ChordState(const ArcSystem& arcs);

  int n() const { return n_; }

  /// Reads off normal-form data. Does not reduce.
  ArcSystem normal_form() const;

  /// Removes innermost bigons and endpoint half-bigons until none remain,
  /// then moves every arc parallel to an empty interval to the upper side.
  void reduce();

  /// True when no chord joins two adjacent points of l, except an upper
  /// chord between two punctures.
  bool is_reduced() const;

  /// Counterclockwise (sign +1) or clockwise (-1) half-twist exchanging
  /// p_j and p_{j+1}. Leaves the result unreduced.
  void half_twist(int j, int sign);

  void swap_hemispheres();

  long long crossing_count() const { return live_ - 2 * n_; }

  /// Replaces the crossing at `anchor` by three consecutive crossings so that
  /// the arc zigzags across l, adding two bigons. Test support.
  void wiggle(const Anchor& anchor);

  /// Adds a crossing beside puncture p_k, turning the arc's first excursion
  /// into a half-bigon. `right` picks the side. Test support.
  void wiggle_endpoint(int k, bool right);

private:
  struct Point {
    int puncture = 0; // 0 for a crossing
    int prev = -1, next = -1;
    int up = -1, down = -1;
    bool alive = true;
  };

  int add_point(int puncture);
  void insert_before(int id, int before);
  void unlink(int id);
  void link(int a, int b, Hemisphere h);
  int& partner(int id, Hemisphere h);
  int partner_of(int id, Hemisphere h) const;
  int find_anchor(const Anchor& a) const;
  bool try_remove_bigon(int x, int y, std::vector<int>& touched);

  int n_;
  std::vector<Point> pts_;
  std::vector<int> puncture_point_; // index k-1 -> point id of p_k
  std::vector<int> label_at_;       // index k-1 -> label of arc ending at p_k
  long long live_ = 0;
};

} // namespace bridge
