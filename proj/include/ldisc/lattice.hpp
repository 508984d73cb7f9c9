#pragma once

// Exact integer geometry of the digital plane Z^2 under the L1 (taxicab)
// metric: pixels, the 45-degree (u,v) frame, digital circles and discs,
// and their closed-form cardinalities.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ldisc {

using Coord = std::int64_t;

// Every coordinate and radius accepted by the library satisfies
// |value| <= kCoordinateBound. Under that bound all closed forms fit in
// signed 64-bit arithmetic.
inline constexpr Coord kCoordinateBound = Coord{1} << 30;

// Largest radius enumerate_circle / enumerate_disc accept by default.
inline constexpr Coord kDefaultEnumerationCap = 4096;

// Circumference / diameter of any digital circle of radius >= 1.
inline constexpr Coord kPiL1 = 4;

struct PixelPoint {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const PixelPoint&, const PixelPoint&) = default;

  constexpr PixelPoint operator+(PixelPoint o) const { return {x + o.x, y + o.y}; }
  constexpr PixelPoint operator-(PixelPoint o) const { return {x - o.x, y - o.y}; }
};

std::string to_string(PixelPoint p);

// Rotated frame u = x + y, v = x - y. L1 distance in (x,y) equals the
// Chebyshev distance in (u,v); pixels are exactly the points with u = v mod 2.
struct UVPoint {
  Coord u = 0;
  Coord v = 0;

  friend constexpr auto operator<=>(const UVPoint&, const UVPoint&) = default;
};

// Throws DomainError if either coordinate is outside kCoordinateBound.
void check_in_bounds(PixelPoint p);

Coord l1_distance(PixelPoint p, PixelPoint q);
Coord chebyshev_distance(UVPoint a, UVPoint b);

constexpr UVPoint to_uv(PixelPoint p) { return {p.x + p.y, p.x - p.y}; }
// Throws ParityError when u and v differ in parity.
PixelPoint from_uv(UVPoint q);

class DigitalCircle {
 public:
  // Throws DomainError for a negative radius or an out-of-bound center.
  DigitalCircle(PixelPoint center, Coord radius);

  PixelPoint center() const { return center_; }
  Coord radius() const { return radius_; }
  bool contains(PixelPoint z) const { return l1_distance(center_, z) == radius_; }

  friend auto operator<=>(const DigitalCircle&, const DigitalCircle&) = default;

 private:
  PixelPoint center_;
  Coord radius_;
};

class DigitalDisc {
 public:
  // Throws DomainError for a negative radius or an out-of-bound center.
  DigitalDisc(PixelPoint center, Coord radius);

  PixelPoint center() const { return center_; }
  Coord radius() const { return radius_; }
  bool contains(PixelPoint z) const { return l1_distance(center_, z) <= radius_; }
  DigitalCircle boundary() const { return {center_, radius_}; }

  friend auto operator<=>(const DigitalDisc&, const DigitalDisc&) = default;

 private:
  PixelPoint center_;
  Coord radius_;
};

std::string to_string(const DigitalDisc& d);

// A finite set of pixels. Elements are kept sorted lexicographically by
// (x, y) without duplicates, so iteration order and equality are
// deterministic.
class PixelSet {
 public:
  using const_iterator = std::vector<PixelPoint>::const_iterator;

  PixelSet() = default;
  explicit PixelSet(std::vector<PixelPoint> points);
  PixelSet(std::initializer_list<PixelPoint> points);

  // Adopts a vector already sorted and duplicate-free. Checked in
  // verification builds.
  static PixelSet from_sorted_unique(std::vector<PixelPoint> points);

  std::size_t size() const { return points_.size(); }
  Coord cardinality() const { return static_cast<Coord>(points_.size()); }
  bool empty() const { return points_.empty(); }
  bool contains(PixelPoint p) const;

  std::span<const PixelPoint> points() const { return points_; }
  const_iterator begin() const { return points_.begin(); }
  const_iterator end() const { return points_.end(); }

  PixelSet translated(PixelPoint offset) const;

  friend bool operator==(const PixelSet&, const PixelSet&) = default;

 private:
  std::vector<PixelPoint> points_;
};

PixelSet union_of(const PixelSet& a, const PixelSet& b);
PixelSet intersection_of(const PixelSet& a, const PixelSet& b);
PixelSet difference_of(const PixelSet& a, const PixelSet& b);
PixelSet symmetric_difference_of(const PixelSet& a, const PixelSet& b);

inline PixelSet operator|(const PixelSet& a, const PixelSet& b) { return union_of(a, b); }
inline PixelSet operator&(const PixelSet& a, const PixelSet& b) { return intersection_of(a, b); }
inline PixelSet operator-(const PixelSet& a, const PixelSet& b) { return difference_of(a, b); }
inline PixelSet operator^(const PixelSet& a, const PixelSet& b) {
  return symmetric_difference_of(a, b);
}

// Number of elements shared by a and b, without materializing the set.
Coord intersection_cardinality(const PixelSet& a, const PixelSet& b);

// Pixels at L1 distance exactly r from the center; {center} when r = 0.
// Throws CapExceeded when r > cap.
PixelSet enumerate_circle(const DigitalCircle& c, Coord cap = kDefaultEnumerationCap);

// Pixels at L1 distance <= R from the center. Throws CapExceeded when R > cap.
PixelSet enumerate_disc(const DigitalDisc& d, Coord cap = kDefaultEnumerationCap);

// 4r. Valid for r >= 1 only: the circle of radius 0 is {center}, one pixel,
// which the formula does not reproduce. Throws DomainError for r < 1.
Coord circle_cardinality_closed(Coord r);

// 8r, so that circumference / (2r) = kPiL1. Throws DomainError for r < 1.
Coord circumference_closed(Coord r);

// 2R^2 + 2R + 1. Throws DomainError for R < 0 or R above kCoordinateBound.
Coord disc_cardinality_closed(Coord radius);

}  // namespace ldisc
