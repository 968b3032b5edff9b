#pragma once

#include "bridge/arc_system.hpp"
#include "bridge/plat.hpp"

namespace bridge {

/// Isotopes the system into minimal position with l. The result has no chord
/// between adjacent points of l other than an upper chord joining two
/// punctures; such an arc could lie on either side, and the upper one is
/// the normal form.
ArcSystem reduce(const ArcSystem& arcs);

bool is_reduced(const ArcSystem& arcs);

/// Image of the system under σ_j^{sign}: the counterclockwise (sign = +1,
/// viewed with the upper hemisphere on top) or clockwise half-twist of the
/// punctures p_j, p_{j+1}. Output is reduced. Throws index_out_of_range.
ArcSystem apply_generator(const ArcSystem& arcs, int j, int sign);

/// Left-to-right composition of apply_generator. Throws
/// mismatched_bridge_count when word.n differs from the system's n.
ArcSystem apply_word(const ArcSystem& arcs, const PlatWord& word);

} // namespace bridge
