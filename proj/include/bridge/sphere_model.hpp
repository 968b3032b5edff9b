#pragma once

#include <utility>
#include <vector>

namespace bridge {

enum class Hemisphere : int { upper = 1, lower = -1 };

inline Hemisphere opposite(Hemisphere h) {
  return h == Hemisphere::upper ? Hemisphere::lower : Hemisphere::upper;
}

inline char to_char(Hemisphere h) { return h == Hemisphere::upper ? '+' : '-'; }

enum class IntervalKind { lower_segment, gap };

/// One of the 2n open sub-arcs of l between consecutive punctures.
struct IntervalInfo {
  int interval;      // 1..2n
  IntervalKind kind;
  int index;         // i of L_i or of δ_i
  int left, right;   // bounding punctures, in the direction of l
};

/// The bridge sphere as the plane plus a point at infinity. The reference
/// circle l is the horizontal axis closed through infinity; puncture p_k sits
/// at position k for k = 1..2n.
///
/// Interval t is the open sub-arc from p_t to p_{t+1}; interval 2n runs from
/// p_2n through infinity back to p_1. Odd intervals are the interiors of the
/// lower segments L_i = [p_{2i-1}, p_{2i}], even intervals are the gaps δ_i.
struct SphereModel {
  int n = 0;

  int puncture_count() const { return 2 * n; }
  int interval_count() const { return 2 * n; }

  static int lower_segment_interval(int i) { return 2 * i - 1; }
  int gap_interval(int i) const { return 2 * wrap_gap(i); }

  /// Gap indices are taken modulo n.
  int wrap_gap(int i) const { return ((i - 1) % n + n) % n + 1; }

  /// Punctures bounding the closure of δ_i.
  std::pair<int, int> gap_ends(int i) const {
    int g = wrap_gap(i);
    return {2 * g, g == n ? 1 : 2 * g + 1};
  }

  IntervalInfo interval(int t) const;

  /// The cyclic sequence L_1, δ_1, ..., L_n, δ_n.
  std::vector<IntervalInfo> intervals() const;
};

/// Throws bridge_error(invalid_bridge_count) when n < 2.
SphereModel sphere_model(int n);

} // namespace bridge
