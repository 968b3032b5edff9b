#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace bridge {

/// A braid generator σ_j^{±1} on 2n strands.
struct Letter {
  int index = 0; // 1..2n-1
  int sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A plat presentation: n caps on top, a braid word on 2n strands, n caps on
/// the bottom. Letters are read in the order the bridge sphere descends.
struct PlatWord {
  int n = 0;
  std::vector<Letter> letters;
  std::string name;

  int strand_count() const { return 2 * n; }

  friend bool operator==(const PlatWord&, const PlatWord&) = default;
};

/// Throws bridge_error(invalid_bridge_count / index_out_of_range) on violation.
void validate(const PlatWord& plat);

/// Parses {"n": <int>, "word": [<signed int>...], "name": <optional string>}.
PlatWord parse_plat(std::string_view text);
PlatWord read_plat_file(const std::filesystem::path& path);

/// Canonical JSON text; parse_plat(serialize_plat(w)) == w.
std::string serialize_plat(const PlatWord& plat);

/// The word read backwards with every sign flipped.
PlatWord inverse(const PlatWord& plat);

/// Every sign flipped; the mirror-image transcription.
PlatWord mirror(const PlatWord& plat);

/// Adds a cap pair on strands 2n+1, 2n+2 and ends the word with
/// σ_{2n}^{sign}. The new maximum and minimum cancel, so the result is a
/// perturbed position of the same link with one more bridge.
PlatWord stabilize(const PlatWord& plat, int sign = 1);

PlatWord concat(const PlatWord& first, const PlatWord& second);

/// Splits after the first `count` letters.
std::pair<PlatWord, PlatWord> split(const PlatWord& plat, std::size_t count);

/// perm[k-1] is the bottom position reached by the strand starting at top
/// position k.
std::vector<int> strand_permutation(const PlatWord& plat);

/// Number of link components of the plat closure.
int closure_components(const PlatWord& plat);

} // namespace bridge
