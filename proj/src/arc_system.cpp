#include "bridge/arc_system.hpp"

#include <algorithm>
#include <map>

#include "bridge/error.hpp"

namespace bridge {

using nlohmann::json;

std::string to_string(const Anchor& a) {
  if (a.is_puncture())
    return "p" + std::to_string(a.index);
  return "c" + std::to_string(a.interval) + "." + std::to_string(a.index);
}

std::vector<Excursion> Arc::excursions() const {
  std::vector<Excursion> out;
  out.reserve(anchors.size() - 1);
  for (std::size_t e = 0; e + 1 < anchors.size(); ++e)
    out.push_back({hemisphere_of(e), anchors[e], anchors[e + 1]});
  return out;
}

namespace {

std::vector<int> count_crossings(int n, const std::vector<Arc>& arcs) {
  std::vector<int> counts(2 * n, 0);
  for (const Arc& arc : arcs)
    for (const Anchor& a : arc.anchors)
      if (!a.is_puncture() && a.interval >= 1 && a.interval <= 2 * n)
        ++counts[a.interval - 1];
  return counts;
}

std::vector<long long> puncture_positions(const std::vector<int>& counts) {
  std::vector<long long> pos(counts.size());
  long long p = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    pos[k] = p;
    p += 1 + counts[k];
  }
  return pos;
}

long long position_of(const std::vector<long long>& puncture_pos, const Anchor& a) {
  if (a.is_puncture())
    return puncture_pos[a.index - 1];
  return puncture_pos[a.interval - 1] + a.index;
}

// Non-crossing check of one hemisphere's chords given by linear positions:
// sweeping left to right, every chord must close while it is innermost.
bool chords_nest(const std::vector<std::pair<long long, long long>>& chords) {
  std::vector<std::pair<long long, std::size_t>> ends;
  ends.reserve(2 * chords.size());
  for (std::size_t i = 0; i < chords.size(); ++i) {
    ends.push_back({chords[i].first, i});
    ends.push_back({chords[i].second, i});
  }
  std::sort(ends.begin(), ends.end());
  std::vector<std::size_t> stack;
  std::vector<bool> opened(chords.size(), false);
  for (const auto& [pos, i] : ends) {
    if (!opened[i]) {
      opened[i] = true;
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != i)
        return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

} // namespace

std::optional<std::string> find_violation(int n, const std::vector<Arc>& arcs) {
  if (n < 2)
    return "n must be at least 2";
  if (static_cast<int>(arcs.size()) != n)
    return "expected " + std::to_string(n) + " arcs, got " + std::to_string(arcs.size());

  std::vector<bool> label_seen(n + 1, false);
  std::vector<int> puncture_uses(2 * n + 1, 0);
  std::map<std::pair<int, int>, int> crossing_uses;
  for (const Arc& arc : arcs) {
    if (arc.label < 1 || arc.label > n || label_seen[arc.label])
      return "bad or repeated label " + std::to_string(arc.label);
    label_seen[arc.label] = true;
    if (arc.anchors.size() < 2)
      return "arc " + std::to_string(arc.label) + " has fewer than two anchors";
    if (!arc.anchors.front().is_puncture() || !arc.anchors.back().is_puncture())
      return "arc " + std::to_string(arc.label) + " must start and end at punctures";
    for (std::size_t k = 0; k < arc.anchors.size(); ++k) {
      const Anchor& a = arc.anchors[k];
      bool end = k == 0 || k + 1 == arc.anchors.size();
      if (a.is_puncture()) {
        if (!end)
          return "arc " + std::to_string(arc.label) + " passes through a puncture";
        if (a.index < 1 || a.index > 2 * n)
          return "puncture index out of range in arc " + std::to_string(arc.label);
        ++puncture_uses[a.index];
      } else {
        if (a.interval < 1 || a.interval > 2 * n || a.index < 1)
          return "crossing " + to_string(a) + " out of range";
        ++crossing_uses[{a.interval, a.index}];
      }
    }
  }
  for (int k = 1; k <= 2 * n; ++k)
    if (puncture_uses[k] != 1)
      return "puncture p" + std::to_string(k) + " is not the endpoint of exactly one arc";

  std::vector<int> counts = count_crossings(n, arcs);
  for (const auto& [key, uses] : crossing_uses) {
    if (uses != 1)
      return "crossing c" + std::to_string(key.first) + "." + std::to_string(key.second) + " used twice";
    if (key.second > counts[key.first - 1])
      return "ranks in interval " + std::to_string(key.first) + " are not 1..count";
  }

  std::vector<long long> ppos = puncture_positions(counts);
  std::vector<std::pair<long long, long long>> upper, lower;
  for (const Arc& arc : arcs)
    for (std::size_t e = 0; e + 1 < arc.anchors.size(); ++e) {
      auto chord = std::pair{position_of(ppos, arc.anchors[e]), position_of(ppos, arc.anchors[e + 1])};
      (arc.hemisphere_of(e) == Hemisphere::upper ? upper : lower).push_back(chord);
    }
  if (!chords_nest(upper))
    return "upper hemisphere chords cross";
  if (!chords_nest(lower))
    return "lower hemisphere chords cross";
  return std::nullopt;
}

namespace {

void canonicalize(std::vector<Arc>& arcs) {
  for (Arc& arc : arcs) {
    if (arc.anchors.size() >= 2 && arc.anchors.front().is_puncture() && arc.anchors.back().is_puncture() &&
        arc.start() > arc.end()) {
      // Reversal keeps the hemisphere of the last excursion as the new first.
      Hemisphere last = arc.hemisphere_of(arc.anchors.size() - 2);
      std::reverse(arc.anchors.begin(), arc.anchors.end());
      arc.first = last;
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.label < b.label; });
}

} // namespace

ArcSystem::ArcSystem(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (auto violation = find_violation(n_, arcs_))
    throw bridge_error(errc::invalid_arc_system, *violation);
  canonicalize(arcs_);
}

ArcSystem::ArcSystem(trusted_t, int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  canonicalize(arcs_);
}

std::vector<int> ArcSystem::crossing_counts() const { return count_crossings(n_, arcs_); }

std::vector<int> ArcSystem::label_at_punctures() const {
  std::vector<int> out(2 * n_, 0);
  for (const Arc& arc : arcs_) {
    out[arc.start() - 1] = arc.label;
    out[arc.end() - 1] = arc.label;
  }
  return out;
}

bool is_planar(const ArcSystem& arcs) {
  std::vector<long long> ppos = puncture_positions(arcs.crossing_counts());
  std::vector<std::pair<long long, long long>> upper, lower;
  for (const Arc& arc : arcs.arcs())
    for (std::size_t e = 0; e + 1 < arc.anchors.size(); ++e) {
      auto chord = std::pair{position_of(ppos, arc.anchors[e]), position_of(ppos, arc.anchors[e + 1])};
      (arc.hemisphere_of(e) == Hemisphere::upper ? upper : lower).push_back(chord);
    }
  return chords_nest(upper) && chords_nest(lower);
}

long long intersection_number(const ArcSystem& arcs) {
  long long total = 0;
  for (const Arc& arc : arcs.arcs())
    total += arc.crossing_count();
  return total;
}

ArcSystem canonical_top_arcs(int n) {
  sphere_model(n);
  std::vector<Arc> arcs;
  for (int r = 1; r <= n; ++r)
    arcs.push_back({r, Hemisphere::upper, {Anchor::puncture(2 * r - 1), Anchor::puncture(2 * r)}});
  return ArcSystem(ArcSystem::trusted, n, std::move(arcs));
}

ArcSystem reflect(const ArcSystem& arcs) {
  std::vector<Arc> out = arcs.arcs();
  for (Arc& arc : out)
    arc.first = opposite(arc.first);
  return ArcSystem(ArcSystem::trusted, arcs.n(), std::move(out));
}

LinearPositions::LinearPositions(const ArcSystem& arcs) {
  std::vector<int> counts = arcs.crossing_counts();
  puncture_pos_ = puncture_positions(counts);
  total_ = puncture_pos_.back() + 1 + counts.back();
}

long long LinearPositions::of(const Anchor& a) const { return position_of(puncture_pos_, a); }

json to_json(const ArcSystem& arcs) {
  json doc;
  doc["format"] = "bridge-normal-form/1";
  doc["n"] = arcs.n();
  doc["crossing_counts"] = arcs.crossing_counts();
  json list = json::array();
  for (const Arc& arc : arcs.arcs()) {
    json anchors = json::array();
    for (const Anchor& a : arc.anchors)
      anchors.push_back(json::array({a.interval, a.index}));
    list.push_back({{"label", arc.label}, {"first", std::string(1, to_char(arc.first))}, {"anchors", anchors}});
  }
  doc["arcs"] = list;
  return doc;
}

namespace {

ArcSystem parse_arc_system(const json& doc) {
  auto fail = [](const std::string& why) -> ArcSystem { throw bridge_error(errc::malformed, why); };
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("arcs") ||
      !doc["arcs"].is_array())
    return fail("normal form needs integer \"n\" and array \"arcs\"");
  int n = doc["n"].get<int>();
  std::vector<Arc> arcs;
  for (const json& a : doc["arcs"]) {
    if (!a.is_object() || !a.contains("label") || !a.contains("first") || !a.contains("anchors"))
      return fail("arc entries need label, first and anchors");
    Arc arc;
    arc.label = a["label"].get<int>();
    std::string first = a["first"].get<std::string>();
    if (first != "+" && first != "-")
      return fail("\"first\" must be \"+\" or \"-\"");
    arc.first = first == "+" ? Hemisphere::upper : Hemisphere::lower;
    for (const json& anchor : a["anchors"]) {
      if (!anchor.is_array() || anchor.size() != 2)
        return fail("anchors are [interval, index] pairs");
      arc.anchors.push_back({anchor[0].get<int>(), anchor[1].get<int>()});
    }
    arcs.push_back(std::move(arc));
  }
  ArcSystem sys(n, std::move(arcs));
  if (doc.contains("crossing_counts") && doc["crossing_counts"].get<std::vector<int>>() != sys.crossing_counts())
    return fail("crossing_counts does not match the arcs");
  return sys;
}

} // namespace

ArcSystem arc_system_from_json(const json& doc) {
  try {
    return parse_arc_system(doc);
  } catch (const json::exception& e) {
    throw bridge_error(errc::malformed, std::string("normal form: ") + e.what());
  }
}

} // namespace bridge
