#include "bridge/certificate.hpp"

#include <sstream>

#include "bridge/error.hpp"

namespace bridge {

namespace {

bool upper_arc_avoids_gap(const Arc& arc, const SphereModel& model, int k) {
  auto [a, b] = model.gap_ends(k);
  if (arc.start() == a || arc.start() == b || arc.end() == a || arc.end() == b)
    return false;
  const int t = model.gap_interval(k);
  for (const Anchor& anchor : arc.anchors)
    if (!anchor.is_puncture() && anchor.interval == t)
      return false;
  return true;
}

// L_s touches the closure of δ_k exactly when s is k or k+1 (cyclically).
int smallest_free_lower(const SphereModel& model, int k) {
  for (int s = 1; s <= model.n; ++s)
    if (s != model.wrap_gap(k) && s != model.wrap_gap(k + 1))
      return s;
  return 0;
}

} // namespace

std::optional<Distance2Witness> find_witness(const BridgeDiagram& d) {
  if (d.n() < 3)
    throw bridge_error(errc::invalid_bridge_count, "distance-2 witness needs n >= 3");
  const SphereModel model = d.model();
  for (int k = 1; k <= d.n(); ++k)
    for (const Arc& arc : d.upper().arcs())
      if (upper_arc_avoids_gap(arc, model, k)) {
        auto [a, b] = model.gap_ends(k);
        return Distance2Witness{k, arc.label, smallest_free_lower(model, k), a, b};
      }
  return std::nullopt;
}

bool validate_witness(const BridgeDiagram& d, const Distance2Witness& w) {
  const int n = d.n();
  if (n < 3 || w.gap < 1 || w.gap > n || w.upper_label < 1 || w.upper_label > n || w.lower_label < 1 ||
      w.lower_label > n)
    return false;

  // Essential: two punctures inside, 2n - 2 >= 2 outside.
  const int gap_ends_first = 2 * w.gap;
  const int gap_ends_second = w.gap == n ? 1 : 2 * w.gap + 1;
  if (w.encircled_first != gap_ends_first || w.encircled_second != gap_ends_second)
    return false;
  if (2 * n - 2 < 2)
    return false;

  // Upper arc: no crossing of l inside the gap and no endpoint on its closure.
  const Arc& arc = d.upper().arc(w.upper_label);
  const int gap_interval = 2 * w.gap;
  for (const Anchor& a : arc.anchors) {
    if (a.is_puncture() && (a.index == gap_ends_first || a.index == gap_ends_second))
      return false;
    if (!a.is_puncture() && a.interval == gap_interval)
      return false;
  }

  // Lower arc: the segment [p_{2s-1}, p_{2s}] shares no point with [p_{2k}, p_{2k+1}].
  auto [lo, hi] = BridgeDiagram::lower_arc(w.lower_label);
  if (lo == gap_ends_first || lo == gap_ends_second || hi == gap_ends_first || hi == gap_ends_second)
    return false;
  return true;
}

const char* to_string(CertificateStatus status) {
  switch (status) {
  case CertificateStatus::not_certified: return "not-certified";
  case CertificateStatus::distance_gt_1_only: return "distance-greater-than-1";
  case CertificateStatus::locally_minimal: return "locally-minimal";
  case CertificateStatus::locally_minimal_distance_2: return "locally-minimal-distance-exactly-2";
  }
  return "unknown";
}

Certificate certify(const BridgeDiagram& d) {
  Certificate c;
  c.provenance = d.provenance();
  c.n = d.n();
  c.report = check_all(d);
  c.well_mixed = c.report.overall;
  c.distance_gt_1 = c.well_mixed;
  c.locally_minimal = c.distance_gt_1 && d.n() >= 3;
  if (d.n() >= 3)
    c.witness = find_witness(d);
  if (!c.distance_gt_1)
    c.status = CertificateStatus::not_certified;
  else if (!c.locally_minimal)
    c.status = CertificateStatus::distance_gt_1_only;
  else if (c.witness)
    c.status = CertificateStatus::locally_minimal_distance_2;
  else
    c.status = CertificateStatus::locally_minimal;
  return c;
}

nlohmann::json to_json(const Distance2Witness& w) {
  return {{"gap", w.gap},
          {"upper_label", w.upper_label},
          {"lower_label", w.lower_label},
          {"curve", "boundary of a regular neighbourhood of the closure of gap " + std::to_string(w.gap)},
          {"encircled_punctures", {w.encircled_first, w.encircled_second}}};
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json doc;
  doc["plat"] = nlohmann::json::parse(serialize_plat(c.provenance));
  doc["n"] = c.n;
  doc["well_mixed"] = c.well_mixed;
  doc["distance_gt_1"] = c.distance_gt_1;
  doc["locally_minimal"] = c.locally_minimal;
  doc["distance_exactly_2"] = c.distance_exactly_2();
  doc["witness"] = c.witness ? to_json(*c.witness) : nlohmann::json(nullptr);
  doc["status"] = to_string(c.status);
  doc["report"] = to_json(c.report);
  return doc;
}

std::string describe(const Certificate& c) {
  std::ostringstream out;
  const std::string name = c.provenance.name.empty() ? "plat" : c.provenance.name;
  out << name << ": " << c.n << "-bridge position, " << c.provenance.letters.size() << " letters\n";
  std::size_t satisfied = 0;
  for (const KeyResult& k : c.report.keys)
    satisfied += k.check.satisfied ? 1 : 0;
  out << "  well-mixed condition: " << (c.well_mixed ? "satisfied" : "fails") << " (" << satisfied << "/"
      << c.report.keys.size() << " keys)\n";
  if (c.distance_gt_1)
    out << "  Hempel distance > 1\n";
  if (c.locally_minimal)
    out << "  locally minimal (admits no Type I move)\n";
  else if (c.distance_gt_1)
    out << "  local minimality not claimed: needs n >= 3\n";
  if (c.witness) {
    const Distance2Witness& w = *c.witness;
    out << "  distance-2 witness: loop around the closure of gap " << w.gap << " (p" << w.encircled_first << ", p"
        << w.encircled_second << "), disjoint from upper arc " << w.upper_label << " and lower arc "
        << w.lower_label << "\n";
  }
  if (c.distance_exactly_2())
    out << "  Hempel distance is exactly 2\n";
  out << "  status: " << to_string(c.status) << "\n";
  return out.str();
}

} // namespace bridge
