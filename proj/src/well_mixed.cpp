#include "bridge/well_mixed.hpp"

#include <algorithm>
#include <set>

#include "bridge/error.hpp"

namespace bridge {

namespace {

void check_gaps(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw bridge_error(errc::index_out_of_range, "gap index out of range 1.." + std::to_string(n));
  if (i == j)
    throw bridge_error(errc::same_gap, "separating family needs two distinct gaps");
}

struct Chord {
  long long lo, hi;
};

Chord chord_of(const LinearPositions& pos, const Anchor& a, const Anchor& b) {
  long long u = pos.of(a), v = pos.of(b);
  return u < v ? Chord{u, v} : Chord{v, u};
}

// Doubled coordinate of a point strictly inside δ_i.
long long gap_probe(const LinearPositions& pos, const SphereModel& model, int i) {
  return 2 * pos.puncture(model.gap_ends(i).first) + 1;
}

bool inside(const Chord& c, long long doubled) { return 2 * c.lo < doubled && doubled < 2 * c.hi; }

bool on_gap(const SphereModel& model, const Anchor& a, int i) {
  return !a.is_puncture() && a.interval == model.gap_interval(i);
}

// Number of l-points strictly on the δ_i side of the chord.
long long side_size(const Chord& c, bool gap_inside, long long total) {
  return gap_inside ? c.hi - c.lo - 1 : total - (c.hi - c.lo + 1);
}

} // namespace

std::vector<int> SeparatingFamily::labels() const {
  std::vector<int> out;
  out.reserve(members.size());
  for (const FamilyMember& m : members)
    out.push_back(m.label);
  return out;
}

bool separates(const LinearPositions& pos, const SphereModel& model, const Anchor& start, const Anchor& end, int i,
               int j) {
  if (on_gap(model, start, i) || on_gap(model, end, i) || on_gap(model, start, j) || on_gap(model, end, j))
    return false;
  Chord c = chord_of(pos, start, end);
  return inside(c, gap_probe(pos, model, i)) != inside(c, gap_probe(pos, model, j));
}

SeparatingFamily separating_family(const ArcSystem& upper, int i, int j, Hemisphere side) {
  check_gaps(upper.n(), i, j);
  const SphereModel model = upper.model();
  const LinearPositions pos(upper);
  const long long probe_i = gap_probe(pos, model, i);

  std::vector<std::pair<long long, FamilyMember>> found;
  for (const Arc& arc : upper.arcs())
    for (std::size_t e = 0; e + 1 < arc.anchors.size(); ++e) {
      if (arc.hemisphere_of(e) != side)
        continue;
      const Anchor& a = arc.anchors[e];
      const Anchor& b = arc.anchors[e + 1];
      if (!separates(pos, model, a, b, i, j))
        continue;
      Chord c = chord_of(pos, a, b);
      found.push_back({side_size(c, inside(c, probe_i), pos.total()), FamilyMember{arc.label, e, a, b}});
    }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  SeparatingFamily family{{i, j, side}, {}};
  family.members.reserve(found.size());
  for (auto& f : found)
    family.members.push_back(f.second);
  return family;
}

SeparatingFamily separating_family(const BridgeDiagram& d, int i, int j, Hemisphere side) {
  return separating_family(d.upper(), i, j, side);
}

bool is_totally_ordered(const ArcSystem& upper, const SeparatingFamily& family) {
  const SphereModel model = upper.model();
  const LinearPositions pos(upper);
  const long long probe_i = gap_probe(pos, model, family.key.i);
  auto in_i_side = [&](const Chord& c, long long p) {
    bool gap_inside = inside(c, probe_i);
    bool p_inside = c.lo < p && p < c.hi;
    return p != c.lo && p != c.hi && p_inside == gap_inside;
  };
  for (std::size_t k = 0; k + 1 < family.members.size(); ++k) {
    const FamilyMember& m0 = family.members[k];
    const FamilyMember& m1 = family.members[k + 1];
    Chord c0 = chord_of(pos, m0.start, m0.end);
    Chord c1 = chord_of(pos, m1.start, m1.end);
    // The later member sits entirely outside the earlier one's δ_i side,
    // and the earlier one entirely inside the later one's δ_i side.
    if (in_i_side(c0, c1.lo) || in_i_side(c0, c1.hi))
      return false;
    bool lo_ok = c0.lo == c1.lo || c0.lo == c1.hi || in_i_side(c1, c0.lo);
    bool hi_ok = c0.hi == c1.lo || c0.hi == c1.hi || in_i_side(c1, c0.hi);
    if (!lo_ok || !hi_ok)
      return false;
    if (c0.lo == c1.lo && c0.hi == c1.hi)
      return false;
  }
  return true;
}

PairCheck check_labels(const std::vector<int>& ordered_labels, int n) {
  std::set<std::pair<int, int>> adjacent;
  for (std::size_t k = 0; k + 1 < ordered_labels.size(); ++k) {
    int r = ordered_labels[k], s = ordered_labels[k + 1];
    if (r != s)
      adjacent.insert({std::min(r, s), std::max(r, s)});
  }
  PairCheck out;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s)
      if (!adjacent.count({r, s}))
        out.missing.push_back({r, s});
  out.satisfied = out.missing.empty();
  return out;
}

PairCheck check_pair(const BridgeDiagram& d, int i, int j, Hemisphere side) {
  return check_labels(separating_family(d, i, j, side).labels(), d.n());
}

WellMixedReport check_all(const BridgeDiagram& d) {
  WellMixedReport report;
  report.overall = true;
  for (int i = 1; i <= d.n(); ++i)
    for (int j = i + 1; j <= d.n(); ++j)
      for (Hemisphere side : {Hemisphere::upper, Hemisphere::lower}) {
        SeparatingFamily family = separating_family(d, i, j, side);
        KeyResult result{family.key, family.members.size(), check_labels(family.labels(), d.n())};
        report.overall = report.overall && result.check.satisfied;
        report.keys.push_back(std::move(result));
      }
  return report;
}

nlohmann::json to_json(const WellMixedReport& report) {
  nlohmann::json keys = nlohmann::json::array();
  for (const KeyResult& k : report.keys) {
    nlohmann::json missing = nlohmann::json::array();
    for (const auto& [r, s] : k.check.missing)
      missing.push_back({r, s});
    keys.push_back({{"i", k.key.i},
                    {"j", k.key.j},
                    {"side", std::string(1, to_char(k.key.side))},
                    {"family_size", k.family_size},
                    {"satisfied", k.check.satisfied},
                    {"missing_pairs", missing}});
  }
  return {{"keys", keys}, {"overall", report.overall}};
}

} // namespace bridge
