#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bridge/arc_system.hpp"
#include "bridge/diagram.hpp"

namespace bridge {

struct FamilyKey {
  int i = 0, j = 0; // gap indices
  Hemisphere side = Hemisphere::upper;

  friend bool operator==(const FamilyKey&, const FamilyKey&) = default;
};

/// One excursion of an upper arc, as a chord of the hemisphere disk.
struct FamilyMember {
  int label = 0;
  std::size_t excursion = 0; // index along the arc, in normal-form traversal order
  Anchor start, end;
};

/// The upper-arc components in one hemisphere separating δ_i from δ_j, in
/// nesting order from the δ_i side to the δ_j side.
struct SeparatingFamily {
  FamilyKey key;
  std::vector<FamilyMember> members;

  std::vector<int> labels() const;
};

/// Does the chord (start, end) of hemisphere `side` leave δ_i and δ_j in
/// different components? A chord with an endpoint inside either gap does not
/// separate them.
bool separates(const LinearPositions& pos, const SphereModel& model, const Anchor& start, const Anchor& end, int i,
               int j);

SeparatingFamily separating_family(const ArcSystem& upper, int i, int j, Hemisphere side);
SeparatingFamily separating_family(const BridgeDiagram& d, int i, int j, Hemisphere side);

/// True when every member's δ_i side strictly contains the previous one's.
bool is_totally_ordered(const ArcSystem& upper, const SeparatingFamily& family);

struct PairCheck {
  bool satisfied = false;
  std::vector<std::pair<int, int>> missing; // label pairs {r, s}, r < s, never adjacent
};

/// The adjacency rule: {r, s} is realised when two consecutive entries of the
/// ordered label list are r and s. Anything between family members that is
/// not itself a member is ignored.
PairCheck check_labels(const std::vector<int>& ordered_labels, int n);

PairCheck check_pair(const BridgeDiagram& d, int i, int j, Hemisphere side);

struct KeyResult {
  FamilyKey key;
  std::size_t family_size = 0;
  PairCheck check;
};

struct WellMixedReport {
  std::vector<KeyResult> keys; // i < j, upper side before lower side
  bool overall = false;
};

WellMixedReport check_all(const BridgeDiagram& d);

nlohmann::json to_json(const WellMixedReport& report);

} // namespace bridge
