#include "bridge/error.hpp"

namespace bridge {

const char* to_string(errc code) {
  switch (code) {
  case errc::malformed: return "malformed";
  case errc::index_out_of_range: return "index-out-of-range";
  case errc::invalid_bridge_count: return "invalid-bridge-count";
  case errc::mismatched_bridge_count: return "mismatched-bridge-count";
  case errc::invalid_arc_system: return "invalid-arc-system";
  case errc::invalid_morse_word: return "invalid-morse-word";
  case errc::same_gap: return "same-gap";
  }
  return "unknown";
}

} // namespace bridge
