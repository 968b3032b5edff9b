#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "bridge/arc_system.hpp"
#include "bridge/plat.hpp"

namespace support {

std::filesystem::path data_path(const std::string& name);

bridge::PlatWord random_word(std::mt19937& rng, int n, int length);

/// A reduced system: the canonical caps pushed through a random word.
bridge::ArcSystem random_system(std::mt19937& rng, int n, int max_length);

/// Every valid arc system on 2n punctures with at most max_crossings
/// crossings of l, built directly from pairs of non-crossing matchings.
std::vector<bridge::ArcSystem> enumerate_systems(int n, int max_crossings);

/// Brute force: the chord (a, b) of the disk bounded by l separates δ_i from
/// δ_j when every sub-interval of δ_i lies on one side and every sub-interval
/// of δ_j on the other.
bool brute_separates(const bridge::ArcSystem& arcs, const bridge::Anchor& a, const bridge::Anchor& b, int i, int j);

/// Number of points of l strictly between a and b on the side containing δ_i.
long long brute_side_size(const bridge::ArcSystem& arcs, const bridge::Anchor& a, const bridge::Anchor& b, int i);

/// Running-count simulation of the width of a Morse word given as 'v'/'^'.
int brute_width(const std::string& word);

/// All words of 'v' and '^' with `maxima` of each that describe one circle.
std::vector<std::string> valid_morse_words(int maxima);

/// Label pairs realised by consecutive entries.
std::vector<std::pair<int, int>> adjacent_pairs(const std::vector<int>& labels);

} // namespace support

#ifdef DOCTEST_VERSION_STR
namespace doctest {
template <>
struct StringMaker<bridge::ArcSystem> {
  static String convert(const bridge::ArcSystem& a) { return bridge::to_json(a).dump().c_str(); }
};
} // namespace doctest
#endif
