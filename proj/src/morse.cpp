#include "bridge/morse.hpp"

#include <algorithm>
#include <numeric>

#include "bridge/error.hpp"

namespace bridge {

MorseWord parse_morse(std::string_view text) {
  MorseWord w;
  for (char ch : text) {
    if (ch == 'v')
      w.events.push_back(CriticalEvent::min);
    else if (ch == '^')
      w.events.push_back(CriticalEvent::max);
    else
      throw bridge_error(errc::malformed, std::string("unexpected character '") + ch + "' in Morse word");
  }
  return w;
}

std::string to_string(const MorseWord& w) {
  std::string out;
  for (CriticalEvent e : w.events)
    out.push_back(e == CriticalEvent::min ? 'v' : '^');
  return out;
}

const char* to_string(LevelKind kind) {
  switch (kind) {
  case LevelKind::thick: return "thick";
  case LevelKind::thin: return "thin";
  case LevelKind::neither: return "neither";
  }
  return "unknown";
}

std::vector<int> level_counts(const MorseWord& w) {
  if (w.events.empty())
    throw bridge_error(errc::invalid_morse_word, "a knot has at least one maximum and one minimum");
  std::vector<int> counts;
  int c = 0;
  for (std::size_t i = 0; i < w.events.size(); ++i) {
    c += w.events[i] == CriticalEvent::min ? 2 : -2;
    bool last = i + 1 == w.events.size();
    if (!last && c < 2)
      throw bridge_error(errc::invalid_morse_word,
                         "strand count drops to " + std::to_string(c) + " after event " + std::to_string(i + 1));
    if (!last)
      counts.push_back(c);
  }
  if (c != 0)
    throw bridge_error(errc::invalid_morse_word, "unequal numbers of maxima and minima");
  return counts;
}

int width(const MorseWord& w) {
  std::vector<int> counts = level_counts(w);
  return std::accumulate(counts.begin(), counts.end(), 0);
}

std::vector<LevelKind> classify_levels(const MorseWord& w) {
  level_counts(w);
  std::vector<LevelKind> out;
  for (std::size_t i = 0; i + 1 < w.events.size(); ++i) {
    CriticalEvent below = w.events[i], above = w.events[i + 1];
    if (below == CriticalEvent::min && above == CriticalEvent::max)
      out.push_back(LevelKind::thick);
    else if (below == CriticalEvent::max && above == CriticalEvent::min)
      out.push_back(LevelKind::thin);
    else
      out.push_back(LevelKind::neither);
  }
  return out;
}

bool is_bridge_position(const MorseWord& w) {
  level_counts(w);
  return std::is_partitioned(w.events.begin(), w.events.end(),
                             [](CriticalEvent e) { return e == CriticalEvent::min; });
}

MorseWord canonical_bridge_word(int n) {
  if (n < 1)
    throw bridge_error(errc::invalid_bridge_count, "bridge number must be positive");
  MorseWord w;
  w.events.assign(n, CriticalEvent::min);
  w.events.insert(w.events.end(), n, CriticalEvent::max);
  return w;
}

int count(const MorseWord& w, CriticalEvent e) {
  return static_cast<int>(std::count(w.events.begin(), w.events.end(), e));
}

} // namespace bridge
