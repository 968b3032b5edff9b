#include "doctest.h"

#include "bridge/curve_engine.hpp"
#include "bridge/diagram.hpp"
#include "bridge/error.hpp"
#include "support.hpp"

using namespace bridge;

TEST_CASE("trivial diagram") {
  BridgeDiagram d = build_bridge_diagram(read_plat_file(support::data_path("trivial3.json")));
  CHECK(d.upper() == canonical_top_arcs(3));
  CHECK(intersection_number(d.upper()) == 0);
  CHECK(BridgeDiagram::lower_arc(2) == std::pair{3, 4});
}

TEST_CASE("single letter diagram") {
  BridgeDiagram d = build_bridge_diagram(parse_plat(R"({"n":2,"word":[2]})"));
  CHECK(d.upper() == apply_generator(canonical_top_arcs(2), 2, 1));
}

TEST_CASE("diagram requires a reduced system") {
  Arc arc{1, Hemisphere::upper,
          {Anchor::puncture(1), Anchor::crossing(2, 2), Anchor::crossing(2, 1), Anchor::puncture(2)}};
  Arc other{2, Hemisphere::upper, {Anchor::puncture(3), Anchor::puncture(4)}};
  CHECK_THROWS_AS(BridgeDiagram(ArcSystem(2, {arc, other})), bridge_error);
}

TEST_CASE("snapshots") {
  PlatWord empty = parse_plat(R"({"n":3,"word":[]})");
  auto s0 = sweep_snapshots(empty);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0] == canonical_top_arcs(3));

  PlatWord w = parse_plat(R"({"n":2,"word":[2,-1,3]})");
  auto s = sweep_snapshots(w);
  REQUIRE(s.size() == 4);
  for (std::size_t k = 1; k < s.size(); ++k)
    CHECK(s[k] == apply_generator(s[k - 1], w.letters[k - 1].index, w.letters[k - 1].sign));
  CHECK(s.back() == build_bridge_diagram(w).upper());

  PlatWord kappa = read_plat_file(support::data_path("kappa.json"));
  auto ks = sweep_snapshots(kappa);
  CHECK(ks.size() == 26);
  CHECK(intersection_number(ks[15]) == 48);
  CHECK(intersection_number(ks[25]) == 162);
  CHECK(ks.back() == build_bridge_diagram(kappa).upper());
}

TEST_CASE("composability and determinism") {
  std::mt19937 rng(37);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 3;
    PlatWord w = support::random_word(rng, n, static_cast<int>(rng() % 12));
    auto [w1, w2] = split(w, rng() % (w.letters.size() + 1));
    CHECK(build_bridge_diagram(w).upper() == apply_word(build_bridge_diagram(w1).upper(), w2));
    CHECK(build_bridge_diagram(w).upper() == build_bridge_diagram(w).upper());
  }
}
