#pragma once

// Proximity measures between finite pixel sets under the L1 ground metric.

#include <compare>
#include <cstdint>

#include "ldisc/lattice.hpp"

namespace ldisc {

// Exact nonnegative integer value of a proximity measure.
struct ProximityValue {
  Coord value = 0;

  friend constexpr auto operator<=>(const ProximityValue&, const ProximityValue&) = default;
};

// m(A,B) = card(A symmetric-difference B). Also defined for empty sets,
// where m(empty, B) = card(B).
ProximityValue symmetric_difference_metric(const PixelSet& a, const PixelSet& b);

// max(max_{x in A} min_{y in B} d(x,y), max_{y in B} min_{x in A} d(x,y))
// by exhaustive pair scan. Throws DomainError if either set is empty.
ProximityValue hausdorff_distance(const PixelSet& a, const PixelSet& b);

// One direction of the above: max_{x in from} min_{y in to} d(x,y).
Coord directed_hausdorff(const PixelSet& from, const PixelSet& to);

}  // namespace ldisc
