#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "bridge/diagram.hpp"
#include "bridge/well_mixed.hpp"

namespace bridge {

/// The loop around the closure of δ_k, disjoint from upper arc r and from
/// lower arc s. It meets the boundaries of the disk neighbourhoods of both
/// arcs in nothing, so it bounds the Hempel distance by 2.
struct Distance2Witness {
  int gap = 0;         // k
  int upper_label = 0; // r
  int lower_label = 0; // s
  int encircled_first = 0, encircled_second = 0; // p_{2k}, p_{2k+1}

  friend bool operator==(const Distance2Witness&, const Distance2Witness&) = default;
};

/// Scans k, then r, smallest first; s is the smallest lower label outside
/// {k, k+1} taken cyclically. Throws invalid_bridge_count when n < 3.
std::optional<Distance2Witness> find_witness(const BridgeDiagram& d);

/// Re-checks a witness directly against the normal-form data.
bool validate_witness(const BridgeDiagram& d, const Distance2Witness& w);

enum class CertificateStatus {
  not_certified,           // well-mixed condition fails; no claim
  distance_gt_1_only,      // distance > 1 but n < 3, so local minimality is not claimed
  locally_minimal,         // distance > 1, n >= 3
  locally_minimal_distance_2, // additionally a witness pins the distance to exactly 2
};

const char* to_string(CertificateStatus status);

struct Certificate {
  PlatWord provenance;
  int n = 0;
  WellMixedReport report;
  bool well_mixed = false;
  bool distance_gt_1 = false;
  bool locally_minimal = false;
  std::optional<Distance2Witness> witness;
  CertificateStatus status = CertificateStatus::not_certified;

  bool distance_exactly_2() const { return distance_gt_1 && witness.has_value(); }
};

Certificate certify(const BridgeDiagram& d);

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const Distance2Witness& w);
std::string describe(const Certificate& c);

} // namespace bridge
