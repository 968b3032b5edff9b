#include "bridge/curve_engine.hpp"

#include "bridge/chord_state.hpp"
#include "bridge/error.hpp"

namespace bridge {

ArcSystem reduce(const ArcSystem& arcs) {
  ChordState state(arcs);
  state.reduce();
  return state.normal_form();
}

bool is_reduced(const ArcSystem& arcs) { return ChordState(arcs).is_reduced(); }

ArcSystem apply_generator(const ArcSystem& arcs, int j, int sign) {
  if (sign != 1 && sign != -1)
    throw bridge_error(errc::malformed, "generator sign must be +1 or -1");
  ChordState state(arcs);
  state.half_twist(j, sign);
  state.reduce();
  return state.normal_form();
}

ArcSystem apply_word(const ArcSystem& arcs, const PlatWord& word) {
  if (word.n != arcs.n())
    throw bridge_error(errc::mismatched_bridge_count, "word has n=" + std::to_string(word.n) +
                                                          " but the arc system has n=" + std::to_string(arcs.n()));
  validate(word);
  ChordState state(arcs);
  state.reduce();
  for (const Letter& l : word.letters) {
    state.half_twist(l.index, l.sign);
    state.reduce();
  }
  return state.normal_form();
}

} // namespace bridge
