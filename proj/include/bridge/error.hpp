#pragma once

#include <stdexcept>
#include <string>

namespace bridge {

enum class errc {
  malformed,
  index_out_of_range,
  invalid_bridge_count,
  mismatched_bridge_count,
  invalid_arc_system,
  invalid_morse_word,
  same_gap,
};

const char* to_string(errc code);

/// Every recoverable failure in the library is reported with one of these.
class bridge_error : public std::runtime_error {
public:
  bridge_error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

} // namespace bridge
