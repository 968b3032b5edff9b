#include "doctest.h"

#include "bridge/certificate.hpp"
#include "bridge/curve_engine.hpp"
#include "bridge/error.hpp"
#include "support.hpp"

using namespace bridge;

namespace {

// Exhaustive scan with no shortcuts: every (k, r), checking each anchor.
bool any_witness(const ArcSystem& a) {
  const int n = a.n();
  for (int k = 1; k <= n; ++k) {
    const int p = 2 * k, q = k == n ? 1 : 2 * k + 1;
    for (const Arc& arc : a.arcs()) {
      bool clear = true;
      for (const Anchor& x : arc.anchors)
        clear = clear && !(x.is_puncture() && (x.index == p || x.index == q)) && x.interval != 2 * k;
      if (clear)
        return true;
    }
  }
  return false;
}

} // namespace

TEST_CASE("trivial n=3 certificate") {
  BridgeDiagram d = build_bridge_diagram(read_plat_file(support::data_path("trivial3.json")));
  Certificate c = certify(d);
  CHECK_FALSE(c.well_mixed);
  CHECK_FALSE(c.distance_gt_1);
  CHECK_FALSE(c.locally_minimal);
  CHECK(c.status == CertificateStatus::not_certified);
  CHECK_FALSE(c.distance_exactly_2());

  // Cap 1 ends at p_2, on the closure of δ_1, so the first admissible upper
  // arc for k = 1 is cap 3.
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == Distance2Witness{1, 3, 3, 2, 3});
  CHECK(validate_witness(d, *c.witness));
}

TEST_CASE("n=2 well-mixed diagram claims distance only") {
  BridgeDiagram d = build_bridge_diagram(read_plat_file(support::data_path("trefoil2.json")));
  Certificate c = certify(d);
  CHECK(c.well_mixed);
  CHECK(c.distance_gt_1);
  CHECK_FALSE(c.locally_minimal);
  CHECK_FALSE(c.witness.has_value());
  CHECK(c.status == CertificateStatus::distance_gt_1_only);
  CHECK_THROWS_AS(find_witness(d), bridge_error);
}

TEST_CASE("kappa certificate") {
  BridgeDiagram d = build_bridge_diagram(read_plat_file(support::data_path("kappa.json")));
  Certificate c = certify(d);
  CHECK(c.well_mixed);
  CHECK(c.distance_gt_1);
  CHECK(c.locally_minimal);
  REQUIRE(c.witness.has_value());
  CHECK(c.distance_exactly_2());
  CHECK(c.status == CertificateStatus::locally_minimal_distance_2);
  CHECK(*c.witness == Distance2Witness{3, 1, 1, 6, 7});
  CHECK(validate_witness(d, *c.witness));
  CHECK(to_json(c)["status"] == "locally-minimal-distance-exactly-2");
  CHECK(describe(c).find("Hempel distance is exactly 2") != std::string::npos);
}

TEST_CASE("diagram with no witness") {
  BridgeDiagram d = build_bridge_diagram(read_plat_file(support::data_path("no_witness3.json")));
  CHECK_FALSE(any_witness(d.upper()));
  CHECK_FALSE(find_witness(d).has_value());
}

TEST_CASE("witness search against exhaustive scan") {
  std::mt19937 rng(47);
  for (int t = 0; t < 500; ++t) {
    const int n = 3 + t % 2;
    BridgeDiagram d(support::random_system(rng, n, 8));
    auto w = find_witness(d);
    CHECK(w.has_value() == any_witness(d.upper()));
    if (w) {
      CHECK(validate_witness(d, *w));
      CHECK(find_witness(d) == w);
      Distance2Witness broken = *w;
      broken.lower_label = w->gap;
      CHECK_FALSE(validate_witness(d, broken));
    }
  }
}

TEST_CASE("certificate invariants") {
  std::mt19937 rng(53);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 3;
    Certificate c = certify(BridgeDiagram(support::random_system(rng, n, 12)));
    CHECK(c.distance_gt_1 == c.well_mixed);
    CHECK(c.locally_minimal == (c.distance_gt_1 && n >= 3));
    CHECK(c.distance_exactly_2() == (c.distance_gt_1 && c.witness.has_value()));
  }
}
