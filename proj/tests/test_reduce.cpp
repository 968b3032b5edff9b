#include "doctest.h"

#include "bridge/chord_state.hpp"
#include "bridge/curve_engine.hpp"
#include "bridge/geometry_oracle.hpp"
#include "support.hpp"

using namespace bridge;

namespace {

std::vector<Anchor> crossings_of(const ArcSystem& a) {
  std::vector<Anchor> out;
  for (const Arc& arc : a.arcs())
    for (const Anchor& x : arc.anchors)
      if (!x.is_puncture())
        out.push_back(x);
  return out;
}

} // namespace

TEST_CASE("single arc bigon straightens to a cap") {
  Arc arc{1, Hemisphere::upper,
          {Anchor::puncture(1), Anchor::crossing(2, 2), Anchor::crossing(2, 1), Anchor::puncture(2)}};
  Arc other{2, Hemisphere::upper, {Anchor::puncture(3), Anchor::puncture(4)}};
  ArcSystem a(2, {arc, other});
  CHECK_FALSE(is_reduced(a));
  CHECK(reduce(a) == canonical_top_arcs(2));
}

TEST_CASE("nested bigons are removed") {
  ArcSystem base = canonical_top_arcs(3);
  ChordState s(base);
  s.wiggle_endpoint(3, true);
  ArcSystem once = s.normal_form();
  // Wiggle the new crossing twice more so the bigons nest.
  s.wiggle(crossings_of(once).front());
  ArcSystem twice = s.normal_form();
  s.wiggle(crossings_of(twice)[1]);
  ArcSystem thrice = s.normal_form();
  CHECK(intersection_number(thrice) == 5);
  CHECK_FALSE(is_reduced(thrice));
  CHECK(reduce(thrice) == base);
}

TEST_CASE("reduce undoes wiggles on random systems") {
  std::mt19937 rng(17);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 3;
    ArcSystem a = support::random_system(rng, n, 6);
    ChordState s(a);
    const int moves = 1 + static_cast<int>(rng() % 3);
    for (int m = 0; m < moves; ++m) {
      ArcSystem cur = s.normal_form();
      std::vector<Anchor> xs = crossings_of(cur);
      if (!xs.empty() && rng() % 2)
        s.wiggle(xs[rng() % xs.size()]);
      else
        s.wiggle_endpoint(1 + static_cast<int>(rng() % (2 * n)), rng() % 2);
    }
    ArcSystem messy = s.normal_form();
    CHECK(is_planar(messy));
    CHECK(intersection_number(messy) > intersection_number(a));
    ArcSystem r = reduce(messy);
    CHECK(r == a);
    CHECK(reduce(r) == r);
  }
}

TEST_CASE("reduce agrees with geometry on wiggled systems") {
  // The oracle straightens through its own extraction path: realize, extract
  // with the identity map, reduce. Wiggled polylines must come back unchanged.
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    ArcSystem a = support::random_system(rng, 3, 4);
    ChordState s(a);
    s.wiggle_endpoint(1 + static_cast<int>(rng() % 6), rng() % 2);
    ArcSystem messy = s.normal_form();
    CHECK(geometry::extract(3, geometry::realize(messy)) == messy);
  }
}

TEST_CASE("reduction properties on enumerated systems") {
  for (const ArcSystem& a : support::enumerate_systems(3, 3)) {
    ArcSystem r = reduce(a);
    CHECK(is_planar(r));
    CHECK(is_reduced(r));
    CHECK(reduce(r) == r);
    CHECK(intersection_number(r) <= intersection_number(a));
    CHECK(r.label_at_punctures() == a.label_at_punctures());
  }
}
