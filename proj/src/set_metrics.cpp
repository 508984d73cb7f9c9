#include "ldisc/set_metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ldisc/error.hpp"

namespace ldisc {

ProximityValue symmetric_difference_metric(const PixelSet& a, const PixelSet& b) {
  const Coord shared = intersection_cardinality(a, b);
  const Coord by_cardinalities = a.cardinality() + b.cardinality() - 2 * shared;
#ifdef LDISC_VERIFY_IDENTITIES
  const Coord by_differences = difference_of(a, b).cardinality() + difference_of(b, a).cardinality();
  const Coord by_definition = symmetric_difference_of(a, b).cardinality();
  if (by_differences != by_cardinalities || by_definition != by_cardinalities) {
    throw std::logic_error("symmetric_difference_metric: algebraic forms disagree");
  }
#endif
  return {by_cardinalities};
}

Coord directed_hausdorff(const PixelSet& from, const PixelSet& to) {
  if (from.empty() || to.empty()) {
    throw DomainError("hausdorff distance is undefined for an empty set");
  }
  Coord worst = 0;
  for (const PixelPoint& p : from) {
    Coord nearest = std::numeric_limits<Coord>::max();
    for (const PixelPoint& q : to) {
      nearest = std::min(nearest, l1_distance(p, q));
      if (nearest <= worst) break;  // p cannot raise the maximum
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

ProximityValue hausdorff_distance(const PixelSet& a, const PixelSet& b) {
  return {std::max(directed_hausdorff(a, b), directed_hausdorff(b, a))};
}

}  // namespace ldisc
