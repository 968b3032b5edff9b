#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bridge/arc_system.hpp"
#include "bridge/plat.hpp"

namespace bridge {

/// Upper arcs in reduced normal form over the canonical lower arcs: lower
/// arc i is the segment L_i = [p_{2i-1}, p_{2i}] of l. Upper labels follow
/// the top caps D^r_+ through the sweep.
class BridgeDiagram {
public:
  /// Throws invalid_arc_system unless `upper` is reduced.
  explicit BridgeDiagram(ArcSystem upper, PlatWord provenance = {}, std::size_t snapshot = 0);

  int n() const { return upper_.n(); }
  SphereModel model() const { return upper_.model(); }
  const ArcSystem& upper() const { return upper_; }
  const PlatWord& provenance() const { return provenance_; }
  std::size_t snapshot() const { return snapshot_; }

  static std::pair<int, int> lower_arc(int i) { return {2 * i - 1, 2 * i}; }

private:
  ArcSystem upper_;
  PlatWord provenance_;
  std::size_t snapshot_;
};

/// Sweeps the bridge sphere down through the whole word, starting from the
/// canonical top caps.
BridgeDiagram build_bridge_diagram(const PlatWord& plat);

/// Element k is the upper arc system after the first k letters.
std::vector<ArcSystem> sweep_snapshots(const PlatWord& plat);

} // namespace bridge
