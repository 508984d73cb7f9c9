#pragma once

// Closed-form proximity of two digital discs, the (u,v) overlap rectangle
// that carries the width/height parameters k and n, and an oracle harness
// checking every closed form against exhaustive pixel enumeration.
//
// Geometry used throughout: under u = x + y, v = x - y a disc of radius R
// centred at c maps onto the pixels of the square [u_c - R, u_c + R] x
// [v_c - R, v_c + R] whose coordinates satisfy u = v (mod 2). Two discs
// therefore overlap in the pixels of the intersection of two squares.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldisc/lattice.hpp"

namespace ldisc {

struct DiscPair {
  DigitalDisc first;
  DigitalDisc second;

  DiscPair swapped() const { return {second, first}; }
  friend auto operator<=>(const DiscPair&, const DiscPair&) = default;
};

// Inclusive bounds of the overlap of the two discs' squares in (u,v).
struct OverlapRect {
  Coord u_lo = 0;
  Coord u_hi = 0;
  Coord v_lo = 0;
  Coord v_hi = 0;

  friend constexpr bool operator==(const OverlapRect&, const OverlapRect&) = default;
};

// Per-parity counts inside an OverlapRect. Pixels of the rectangle are the
// points (u,v) with u and v both even or both odd, so the pixel count is
// u_count[0] * v_count[0] + u_count[1] * v_count[1].
struct RectDims {
  Coord k = 0;  // u-values of the majority parity class
  Coord n = 0;  // v-values of the majority parity class
  int majority_parity = 0;
  std::array<Coord, 2> u_count{};
  std::array<Coord, 2> v_count{};

  Coord pixel_count() const { return u_count[0] * v_count[0] + u_count[1] * v_count[1]; }
};

enum class Regime : unsigned {
  disjoint = 1u << 0,
  thm1 = 1u << 1,       // boundaries intersect
  thm2 = 1u << 2,       // discs meet, boundaries do not, inner circle of first meets second
  thm3 = 1u << 3,       // axis-collinear centres, boundaries intersect
  corollary = 1u << 4,  // axis-collinear centres, discs meet, boundaries do not
  collinear = 1u << 5,  // centres share a row or a column
  other = 1u << 6,      // discs meet but no closed form applies
};

class RegimeSet {
 public:
  constexpr RegimeSet() = default;

  constexpr bool has(Regime r) const { return (bits_ & static_cast<unsigned>(r)) != 0; }
  constexpr RegimeSet& add(Regime r) {
    bits_ |= static_cast<unsigned>(r);
    return *this;
  }
  constexpr unsigned bits() const { return bits_; }

  // Labels joined by '+', in enum order, e.g. "thm1+thm3+collinear".
  std::string to_string() const;

  friend constexpr bool operator==(RegimeSet, RegimeSet) = default;

 private:
  unsigned bits_ = 0;
};

std::string_view regime_name(Regime r);

enum class Formula {
  thm1,
  thm2,
  thm3,
  corollary,            // r0 exactly as printed: (R1 - 1 + R2 + (gamma - alpha)) / 2
  corollary_corrected,  // sign-corrected r0: (R1 - 1 + R2 - (gamma - alpha)) / 2
};

std::string_view formula_name(Formula f);
std::optional<Formula> parse_formula(std::string_view name);

class FormulaSet {
 public:
  constexpr FormulaSet() = default;

  static constexpr FormulaSet all() {
    FormulaSet s;
    s.bits_ = 0x1f;
    return s;
  }

  constexpr bool has(Formula f) const { return (bits_ >> static_cast<unsigned>(f)) & 1u; }
  constexpr FormulaSet& add(Formula f) {
    bits_ |= 1u << static_cast<unsigned>(f);
    return *this;
  }
  constexpr bool empty() const { return bits_ == 0; }

  // Comma-joined names in enum order.
  std::string to_string() const;

 private:
  unsigned bits_ = 0;
};

// Parses a comma-separated list. "corollary" selects both corollary
// readings. Throws DomainError on an unknown name.
FormulaSet parse_formula_list(std::string_view list);

// Analytic test for C(a) and C(b) sharing a pixel: the centre distance D
// must satisfy |r1 - r2| <= D <= r1 + r2 and D = r1 + r2 (mod 2).
bool circles_meet(PixelPoint a, Coord r1, PixelPoint b, Coord r2);

// Enumerates the smaller boundary circle and tests each pixel's distance to
// the other centre.
bool boundaries_intersect(const DiscPair& p, Coord cap = kDefaultEnumerationCap);

std::optional<OverlapRect> overlap_rectangle(const DiscPair& p);

// Throws DegenerateOverlap when the rectangle holds no pixel. On a tie of
// k * n between the two classes the even class is reported.
RectDims rect_dims(const OverlapRect& rect);

// Pixel count of the overlap from the rectangle alone; 0 when the discs
// are disjoint.
Coord overlap_pixel_count(const DiscPair& p);

RegimeSet classify_pair(const DiscPair& p);

// card(enumerate_disc(first) & enumerate_disc(second)).
Coord intersection_cardinality_oracle(const DiscPair& p, Coord cap = kDefaultEnumerationCap);

// 2(R1^2 + R2^2 + R1 + R2 - 2kn + k + n). Throws RegimeError unless the pair
// is classified thm1.
Coord m_closed_thm1(const DiscPair& p, const RectDims& dims);

// 2(R1^2 + R2^2 + R1 + R2 + 1 - 2kn). Throws RegimeError unless the pair is
// classified thm2.
Coord m_closed_thm2(const DiscPair& p, const RectDims& dims);

// (R1 - R2)^2 + 2(R1 + R2 + 1)D - D^2 with D the centre offset along the
// shared axis. Throws RegimeError unless the centres are axis-collinear and
// distinct, D <= R1 + R2, R1 + R2 - D is even and the boundaries intersect.
Coord m_closed_thm3(const DiscPair& p);

// The disc the overlap collapses to under m_closed_thm3's hypothesis:
// radius (R1 + R2 - D) / 2, centred on the shared axis at offset
// (R1 + D - R2) / 2 from the first centre towards the second.
DigitalDisc thm3_overlap_disc(const DiscPair& p);

enum class CorollaryReading { printed, sign_corrected };

// 2(R1^2 + R2^2 + R1 + R2 - 2 r0^2 - 4 r0 + 1), evaluated exactly (r0 may be
// a half-integer; the result is always an integer). Throws RegimeError
// unless the pair is classified corollary.
Coord m_closed_corollary(const DiscPair& p, CorollaryReading reading = CorollaryReading::printed);

struct FormulaCheck {
  Formula formula;
  Coord closed_m = 0;
  bool agrees = false;
};

struct VerificationReport {
  explicit VerificationReport(const DiscPair& p) : pair(p) {}

  DiscPair pair;
  RegimeSet regime;
  Coord card_first = 0;
  Coord card_second = 0;
  Coord card_intersection = 0;
  Coord oracle_m = 0;
  std::optional<RectDims> dims;
  // Present for thm3 pairs: whether the overlap equals thm3_overlap_disc as a set.
  std::optional<bool> overlap_is_predicted_disc;
  // One entry per formula whose hypothesis the pair satisfies, in Formula order.
  std::vector<FormulaCheck> checks;

  const FormulaCheck* find(Formula f) const;
  bool disagrees_on(FormulaSet formulas) const;
};

VerificationReport verify_pair(const DiscPair& p, Coord cap = kDefaultEnumerationCap);

struct SweepOptions {
  Coord max_radius = 0;
  Coord max_offset = 0;
  FormulaSet formulas = FormulaSet::all();
  Coord enumeration_cap = kDefaultEnumerationCap;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepResult {
  // Pairs on which at least one selected formula was evaluated.
  std::int64_t pairs_checked = 0;
  // Reports disagreeing on a selected formula, ordered by (R1, R2, gamma, delta).
  std::vector<VerificationReport> disagreements;
};

// First centre fixed at the origin; second centre over [0, max_offset]^2;
// both radii over [0, max_radius]. Throws CapExceeded when max_radius
// exceeds the enumeration cap.
SweepResult counterexample_search(const SweepOptions& options);

}  // namespace ldisc
