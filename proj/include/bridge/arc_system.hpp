#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bridge/sphere_model.hpp"

namespace bridge {

/// A point where an arc meets l: either a puncture, or the rank-th crossing
/// (counting left to right along l) inside an interval.
struct Anchor {
  int interval = 0; // 0 for a puncture
  int index = 0;    // puncture number, or rank within the interval

  static Anchor puncture(int k) { return {0, k}; }
  static Anchor crossing(int interval, int rank) { return {interval, rank}; }

  bool is_puncture() const { return interval == 0; }

  friend auto operator<=>(const Anchor&, const Anchor&) = default;
};

std::string to_string(const Anchor& a);

/// A component of an arc minus l, lying in one hemisphere.
struct Excursion {
  Hemisphere hemisphere;
  Anchor start;
  Anchor end;
};

/// An embedded arc between two punctures, stored as the sequence of points
/// where it meets l. Consecutive anchors are joined inside alternating
/// hemispheres, beginning with `first`.
struct Arc {
  int label = 0;
  Hemisphere first = Hemisphere::upper;
  std::vector<Anchor> anchors;

  int start() const { return anchors.front().index; }
  int end() const { return anchors.back().index; }
  int crossing_count() const { return static_cast<int>(anchors.size()) - 2; }

  Hemisphere hemisphere_of(std::size_t excursion) const {
    return excursion % 2 == 0 ? first : opposite(first);
  }

  std::vector<Excursion> excursions() const;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Disjoint arcs on the 2n-punctured sphere in normal coordinates relative to
/// l. Arcs are kept sorted by label and each is traversed from its smaller
/// endpoint, so two systems are isotopic rel l exactly when their data match.
class ArcSystem {
public:
  struct trusted_t {};
  static constexpr trusted_t trusted{};

  /// Validates every invariant; throws bridge_error(invalid_arc_system).
  ArcSystem(int n, std::vector<Arc> arcs);

  /// Skips validation. For producers that construct valid data by design.
  ArcSystem(trusted_t, int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  SphereModel model() const { return SphereModel{n_}; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int label) const { return arcs_.at(label - 1); }

  /// counts[t-1] = number of crossings in interval t.
  std::vector<int> crossing_counts() const;

  /// label_at[k-1] = label of the arc ending at puncture k.
  std::vector<int> label_at_punctures() const;

  friend bool operator==(const ArcSystem&, const ArcSystem&) = default;

private:
  int n_;
  std::vector<Arc> arcs_;
};

/// Empty when the data satisfies every ArcSystem invariant, otherwise a
/// description of the first violation found.
std::optional<std::string> find_violation(int n, const std::vector<Arc>& arcs);

/// Non-crossing test for the chords of each hemisphere.
bool is_planar(const ArcSystem& arcs);

/// Total number of l-crossings, punctures not counted.
long long intersection_number(const ArcSystem& arcs);

/// n caps, arc r joining p_{2r-1} to p_{2r} through the upper hemisphere.
ArcSystem canonical_top_arcs(int n);

/// The image under the reflection fixing l and exchanging the hemispheres.
/// Arcs parallel to an empty interval end up on the lower side; reduce puts
/// them back.
ArcSystem reflect(const ArcSystem& arcs);

/// Position of each anchor in the linear order along l starting at p_1.
class LinearPositions {
public:
  explicit LinearPositions(const ArcSystem& arcs);

  long long of(const Anchor& a) const;
  long long puncture(int k) const { return puncture_pos_.at(k - 1); }
  long long total() const { return total_; }

private:
  std::vector<long long> puncture_pos_;
  long long total_ = 0;
};

/// Canonical JSON: {"format", "n", "crossing_counts", "arcs":[{"label","first","anchors"}]}.
/// An anchor is [0,k] for puncture p_k and [t,r] for the rank-r crossing in interval t.
nlohmann::json to_json(const ArcSystem& arcs);
ArcSystem arc_system_from_json(const nlohmann::json& j);

} // namespace bridge
