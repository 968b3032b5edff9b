#pragma once

#include <string>
#include <string_view>
#include <vector>

// Width bookkeeping for Morse positions given only the order of their
// critical levels. Type I / Type II moves need the embedded disks and are not
// detectable from a word alone.

namespace bridge {

enum class CriticalEvent { min, max };

/// Critical events listed bottom-up, from the lowest critical level.
struct MorseWord {
  std::vector<CriticalEvent> events;
};

enum class LevelKind { thick, thin, neither };

/// 'v' is a minimum, '^' a maximum, read bottom-up.
MorseWord parse_morse(std::string_view text);
std::string to_string(const MorseWord& w);
const char* to_string(LevelKind kind);

/// Strand counts of the regular levels between consecutive critical levels.
/// Throws invalid_morse_word unless the word describes a single circle.
std::vector<int> level_counts(const MorseWord& w);

int width(const MorseWord& w);
std::vector<LevelKind> classify_levels(const MorseWord& w);
bool is_bridge_position(const MorseWord& w);

/// n minima followed by n maxima.
MorseWord canonical_bridge_word(int n);

int count(const MorseWord& w, CriticalEvent e);

} // namespace bridge
