#include "bridge/sphere_model.hpp"

#include <string>

#include "bridge/error.hpp"

namespace bridge {

IntervalInfo SphereModel::interval(int t) const {
  if (t < 1 || t > interval_count())
    throw bridge_error(errc::index_out_of_range, "interval " + std::to_string(t) + " out of range");
  IntervalInfo info;
  info.interval = t;
  info.kind = t % 2 == 1 ? IntervalKind::lower_segment : IntervalKind::gap;
  info.index = (t + 1) / 2;
  info.left = t;
  info.right = t == interval_count() ? 1 : t + 1;
  return info;
}

std::vector<IntervalInfo> SphereModel::intervals() const {
  std::vector<IntervalInfo> out;
  out.reserve(interval_count());
  for (int t = 1; t <= interval_count(); ++t)
    out.push_back(interval(t));
  return out;
}

SphereModel sphere_model(int n) {
  if (n < 2)
    throw bridge_error(errc::invalid_bridge_count, "sphere model needs n >= 2, got " + std::to_string(n));
  return SphereModel{n};
}

} // namespace bridge
