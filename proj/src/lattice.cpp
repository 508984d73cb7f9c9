#include "ldisc/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iterator>
#include <sstream>

#include "ldisc/error.hpp"

namespace ldisc {

namespace {

bool in_bounds(Coord v) { return v >= -kCoordinateBound && v <= kCoordinateBound; }

void check_radius(Coord r, const char* what) {
  if (r < 0) {
    throw DomainError(std::string(what) + ": radius must be nonnegative, got " + std::to_string(r));
  }
  if (r > kCoordinateBound) {
    throw DomainError(std::string(what) + ": radius " + std::to_string(r) +
                      " exceeds the coordinate bound 2^30");
  }
}

void check_cap(Coord r, Coord cap, const char* what) {
  if (r > cap) {
    throw CapExceeded(std::string(what) + ": radius " + std::to_string(r) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  }
}

}  // namespace

std::string to_string(PixelPoint p) {
  std::ostringstream os;
  os << '(' << p.x << ',' << p.y << ')';
  return os.str();
}

void check_in_bounds(PixelPoint p) {
  if (!in_bounds(p.x) || !in_bounds(p.y)) {
    throw DomainError("pixel " + to_string(p) + " lies outside the coordinate bound 2^30");
  }
}

Coord l1_distance(PixelPoint p, PixelPoint q) {
  check_in_bounds(p);
  check_in_bounds(q);
  return std::abs(p.x - q.x) + std::abs(p.y - q.y);
}

Coord chebyshev_distance(UVPoint a, UVPoint b) {
  return std::max(std::abs(a.u - b.u), std::abs(a.v - b.v));
}

PixelPoint from_uv(UVPoint q) {
  // u + v = 2x must be even.
  if (((q.u + q.v) & 1) != 0) {
    std::ostringstream os;
    os << "(u,v) = (" << q.u << ',' << q.v << ") has u + v odd and is not a pixel";
    throw ParityError(os.str());
  }
  return {(q.u + q.v) / 2, (q.u - q.v) / 2};
}

DigitalCircle::DigitalCircle(PixelPoint center, Coord radius) : center_(center), radius_(radius) {
  check_in_bounds(center);
  check_radius(radius, "digital circle");
}

DigitalDisc::DigitalDisc(PixelPoint center, Coord radius) : center_(center), radius_(radius) {
  check_in_bounds(center);
  check_radius(radius, "digital disc");
}

std::string to_string(const DigitalDisc& d) {
  std::ostringstream os;
  os << '(' << d.center().x << ',' << d.center().y << ',' << d.radius() << ')';
  return os.str();
}

PixelSet::PixelSet(std::vector<PixelPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PixelSet::PixelSet(std::initializer_list<PixelPoint> points)
    : PixelSet(std::vector<PixelPoint>(points)) {}

PixelSet PixelSet::from_sorted_unique(std::vector<PixelPoint> points) {
#ifdef LDISC_VERIFY_IDENTITIES
  if (std::adjacent_find(points.begin(), points.end(), std::greater_equal<>{}) != points.end()) {
    throw std::logic_error("PixelSet::from_sorted_unique: input not strictly increasing");
  }
#endif
  PixelSet s;
  s.points_ = std::move(points);
  return s;
}

bool PixelSet::contains(PixelPoint p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PixelSet PixelSet::translated(PixelPoint offset) const {
  std::vector<PixelPoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p + offset);
  // Translation preserves lexicographic order.
  return from_sorted_unique(std::move(out));
}

PixelSet union_of(const PixelSet& a, const PixelSet& b) {
  std::vector<PixelPoint> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PixelSet::from_sorted_unique(std::move(out));
}

PixelSet intersection_of(const PixelSet& a, const PixelSet& b) {
  std::vector<PixelPoint> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PixelSet::from_sorted_unique(std::move(out));
}

PixelSet difference_of(const PixelSet& a, const PixelSet& b) {
  std::vector<PixelPoint> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PixelSet::from_sorted_unique(std::move(out));
}

PixelSet symmetric_difference_of(const PixelSet& a, const PixelSet& b) {
  std::vector<PixelPoint> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PixelSet::from_sorted_unique(std::move(out));
}

Coord intersection_cardinality(const PixelSet& a, const PixelSet& b) {
  Coord count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

PixelSet enumerate_circle(const DigitalCircle& c, Coord cap) {
  const Coord r = c.radius();
  check_cap(r, cap, "enumerate_circle");
  const PixelPoint o = c.center();
  std::vector<PixelPoint> out;
  out.reserve(r == 0 ? 1 : static_cast<std::size_t>(4 * r));
  // Column by column; each column x holds the pixels y = cy -+ (r - |x - cx|).
  for (Coord x = o.x - r; x <= o.x + r; ++x) {
    const Coord h = r - std::abs(x - o.x);
    out.push_back({x, o.y - h});
    if (h != 0) out.push_back({x, o.y + h});
  }
  return PixelSet::from_sorted_unique(std::move(out));
}

PixelSet enumerate_disc(const DigitalDisc& d, Coord cap) {
  const Coord radius = d.radius();
  check_cap(radius, cap, "enumerate_disc");
  const PixelPoint o = d.center();
  std::vector<PixelPoint> out;
  out.reserve(static_cast<std::size_t>(2 * radius * radius + 2 * radius + 1));
  for (Coord x = o.x - radius; x <= o.x + radius; ++x) {
    const Coord h = radius - std::abs(x - o.x);
    for (Coord y = o.y - h; y <= o.y + h; ++y) out.push_back({x, y});
  }
  return PixelSet::from_sorted_unique(std::move(out));
}

Coord circle_cardinality_closed(Coord r) {
  if (r < 1) {
    throw DomainError("circle_cardinality_closed: 4r holds only for r >= 1 (the radius-0 circle "
                      "is the single center pixel), got r = " +
                      std::to_string(r));
  }
  check_radius(r, "circle_cardinality_closed");
  return 4 * r;
}

Coord circumference_closed(Coord r) {
  if (r < 1) {
    throw DomainError("circumference_closed: defined for r >= 1, got r = " + std::to_string(r));
  }
  check_radius(r, "circumference_closed");
  return 8 * r;
}

Coord disc_cardinality_closed(Coord radius) {
  check_radius(radius, "disc_cardinality_closed");
  return 2 * radius * radius + 2 * radius + 1;
}

}  // namespace ldisc
