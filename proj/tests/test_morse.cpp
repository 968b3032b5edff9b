#include "doctest.h"

#include "bridge/error.hpp"
#include "bridge/morse.hpp"
#include "support.hpp"

using namespace bridge;

TEST_CASE("width examples") {
  CHECK(width(canonical_bridge_word(1)) == 2);
  CHECK(width(canonical_bridge_word(4)) == 32);
  CHECK(width(parse_morse("v^")) == 2);
  CHECK(width(parse_morse("vv^v^^")) == 14);
  CHECK(support::brute_width("vv^v^^") == 14);
  for (int n = 1; n <= 6; ++n)
    CHECK(width(canonical_bridge_word(n)) == 2 * n * n);
}

TEST_CASE("invalid words") {
  CHECK_THROWS_AS(width(parse_morse("vv^^v^")), bridge_error);
  CHECK_THROWS_AS(classify_levels(parse_morse("vv^^v^")), bridge_error);
  CHECK_THROWS_AS(is_bridge_position(parse_morse("")), bridge_error);
  CHECK_THROWS_AS(width(parse_morse("vv^")), bridge_error);
  CHECK_THROWS_AS(width(parse_morse("^v")), bridge_error);
  CHECK_THROWS_AS(parse_morse("vx^"), bridge_error);
}

TEST_CASE("classification") {
  CHECK(classify_levels(parse_morse("v^")) == std::vector<LevelKind>{LevelKind::thick});
  auto kinds = classify_levels(canonical_bridge_word(4));
  CHECK(std::count(kinds.begin(), kinds.end(), LevelKind::thick) == 1);
  CHECK(std::count(kinds.begin(), kinds.end(), LevelKind::thin) == 0);
  CHECK(is_bridge_position(canonical_bridge_word(4)));
  CHECK_FALSE(is_bridge_position(parse_morse("vv^v^^")));
  CHECK(to_string(parse_morse("vv^v^^")) == "vv^v^^");
}

TEST_CASE("exhaustive small words") {
  for (int m = 1; m <= 5; ++m) {
    auto words = support::valid_morse_words(m);
    CHECK_FALSE(words.empty());
    for (const std::string& text : words) {
      MorseWord w = parse_morse(text);
      const int wd = width(w);
      CHECK(wd == support::brute_width(text));
      // The bridge position is the widest arrangement of m maxima.
      CHECK(wd <= 2 * m * m);
      CHECK((wd == 2 * m * m) == is_bridge_position(w));
      auto kinds = classify_levels(w);
      CHECK(std::count(kinds.begin(), kinds.end(), LevelKind::thick) ==
            std::count(kinds.begin(), kinds.end(), LevelKind::thin) + 1);
    }
  }
}
