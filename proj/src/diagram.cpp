#include "bridge/diagram.hpp"

#include "bridge/chord_state.hpp"
#include "bridge/curve_engine.hpp"
#include "bridge/error.hpp"

namespace bridge {

BridgeDiagram::BridgeDiagram(ArcSystem upper, PlatWord provenance, std::size_t snapshot)
    : upper_(std::move(upper)), provenance_(std::move(provenance)), snapshot_(snapshot) {
  if (!is_reduced(upper_))
    throw bridge_error(errc::invalid_arc_system, "bridge diagram needs reduced upper arcs");
}

BridgeDiagram build_bridge_diagram(const PlatWord& plat) {
  validate(plat);
  sphere_model(plat.n);
  ArcSystem upper = apply_word(canonical_top_arcs(plat.n), plat);
  std::size_t level = plat.letters.size();
  return BridgeDiagram(std::move(upper), plat, level);
}

std::vector<ArcSystem> sweep_snapshots(const PlatWord& plat) {
  validate(plat);
  sphere_model(plat.n);
  std::vector<ArcSystem> out;
  out.reserve(plat.letters.size() + 1);
  ChordState state(canonical_top_arcs(plat.n));
  out.push_back(state.normal_form());
  for (const Letter& l : plat.letters) {
    state.half_twist(l.index, l.sign);
    state.reduce();
    out.push_back(state.normal_form());
  }
  return out;
}

} // namespace bridge
