#include "ldisc/proximity.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ldisc/error.hpp"
#include "ldisc/set_metrics.hpp"

namespace ldisc {

namespace {

__extension__ typedef __int128 Wide;

Coord narrow(Wide v, const char* what) {
  if (v > std::numeric_limits<Coord>::max() || v < std::numeric_limits<Coord>::min()) {
    throw DomainError(std::string(what) + ": result does not fit in 64 bits");
  }
  return static_cast<Coord>(v);
}

Coord floor_mod2(Coord v) { return ((v % 2) + 2) % 2; }

// Number of t in [lo, hi] with t = parity (mod 2).
Coord count_with_parity(Coord lo, Coord hi, Coord parity) {
  if (lo > hi) return 0;
  const Coord first = floor_mod2(lo) == parity ? lo : lo + 1;
  if (first > hi) return 0;
  return (hi - first) / 2 + 1;
}

std::string describe(const DiscPair& p) {
  return to_string(p.first) + " / " + to_string(p.second);
}

struct AxisOffset {
  Coord distance = 0;  // D, centre offset along the shared axis
  bool horizontal = true;
  Coord direction = 1;  // +1 when the second centre lies in the positive direction
};

// Offset of two distinct axis-collinear centres, or nullopt otherwise.
std::optional<AxisOffset> axis_offset(PixelPoint a, PixelPoint b) {
  if (a == b) return std::nullopt;
  if (a.y == b.y) return AxisOffset{std::abs(b.x - a.x), true, b.x > a.x ? 1 : -1};
  if (a.x == b.x) return AxisOffset{std::abs(b.y - a.y), false, b.y > a.y ? 1 : -1};
  return std::nullopt;
}

AxisOffset require_thm3_setting(const DiscPair& p, const char* what) {
  const auto axis = axis_offset(p.first.center(), p.second.center());
  if (!axis) {
    throw RegimeError(std::string(what) + ": centres are not distinct and axis-collinear: " +
                      describe(p));
  }
  const Coord r1 = p.first.radius();
  const Coord r2 = p.second.radius();
  if (axis->distance > r1 + r2) {
    throw RegimeError(std::string(what) + ": centre offset exceeds R1 + R2: " + describe(p));
  }
  if (((r1 + r2 - axis->distance) & 1) != 0) {
    throw RegimeError(std::string(what) +
                      ": R1 + R2 - D is odd, so the overlap is not a digital disc; this pair "
                      "belongs to the thm2 path: " +
                      describe(p));
  }
  if (!circles_meet(p.first.center(), r1, p.second.center(), r2)) {
    throw RegimeError(std::string(what) + ": boundaries do not intersect: " + describe(p));
  }
  return *axis;
}

void require_regime(const DiscPair& p, Regime r, const char* what) {
  const RegimeSet regime = classify_pair(p);
  if (!regime.has(r)) {
    throw RegimeError(std::string(what) + ": pair " + describe(p) + " is classified " +
                      regime.to_string() + ", not " + std::string(regime_name(r)));
  }
}

Wide disc_cards_sum(const DiscPair& p) {
  const Wide r1 = p.first.radius();
  const Wide r2 = p.second.radius();
  return r1 * r1 + r2 * r2 + r1 + r2;
}

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::disjoint: return "disjoint";
    case Regime::thm1: return "thm1";
    case Regime::thm2: return "thm2";
    case Regime::thm3: return "thm3";
    case Regime::corollary: return "corollary";
    case Regime::collinear: return "collinear";
    case Regime::other: return "other";
  }
  return "?";
}

std::string RegimeSet::to_string() const {
  static constexpr Regime kOrder[] = {Regime::disjoint, Regime::thm1,      Regime::thm2,
                                      Regime::thm3,     Regime::corollary, Regime::collinear,
                                      Regime::other};
  std::string out;
  for (Regime r : kOrder) {
    if (!has(r)) continue;
    if (!out.empty()) out += '+';
    out += regime_name(r);
  }
  return out.empty() ? "none" : out;
}

std::string_view formula_name(Formula f) {
  switch (f) {
    case Formula::thm1: return "thm1";
    case Formula::thm2: return "thm2";
    case Formula::thm3: return "thm3";
    case Formula::corollary: return "corollary";
    case Formula::corollary_corrected: return "corollary_corrected";
  }
  return "?";
}

std::optional<Formula> parse_formula(std::string_view name) {
  for (Formula f : {Formula::thm1, Formula::thm2, Formula::thm3, Formula::corollary,
                    Formula::corollary_corrected}) {
    if (formula_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string FormulaSet::to_string() const {
  std::string out;
  for (Formula f : {Formula::thm1, Formula::thm2, Formula::thm3, Formula::corollary,
                    Formula::corollary_corrected}) {
    if (!has(f)) continue;
    if (!out.empty()) out += ',';
    out += formula_name(f);
  }
  return out;
}

FormulaSet parse_formula_list(std::string_view list) {
  FormulaSet set;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    std::string_view item = list.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "all") {
      set = FormulaSet::all();
    } else if (auto f = parse_formula(item)) {
      set.add(*f);
      if (*f == Formula::corollary) set.add(Formula::corollary_corrected);
    } else {
      throw DomainError("unknown formula '" + std::string(item) +
                        "' (expected thm1, thm2, thm3, corollary, corollary_corrected or all)");
    }
    pos = comma + 1;
  }
  return set;
}

bool circles_meet(PixelPoint a, Coord r1, PixelPoint b, Coord r2) {
  if (r1 < 0 || r2 < 0) return false;
  const Coord d = l1_distance(a, b);
  return std::abs(r1 - r2) <= d && d <= r1 + r2 && ((r1 + r2 - d) & 1) == 0;
}

bool boundaries_intersect(const DiscPair& p, Coord cap) {
  const DigitalDisc& small = p.first.radius() <= p.second.radius() ? p.first : p.second;
  const DigitalDisc& large = p.first.radius() <= p.second.radius() ? p.second : p.first;
  const PixelSet ring = enumerate_circle(small.boundary(), cap);
  return std::any_of(ring.begin(), ring.end(), [&](PixelPoint z) {
    return l1_distance(z, large.center()) == large.radius();
  });
}

std::optional<OverlapRect> overlap_rectangle(const DiscPair& p) {
  const UVPoint a = to_uv(p.first.center());
  const UVPoint b = to_uv(p.second.center());
  const Coord r1 = p.first.radius();
  const Coord r2 = p.second.radius();
  OverlapRect rect{std::max(a.u - r1, b.u - r2), std::min(a.u + r1, b.u + r2),
                   std::max(a.v - r1, b.v - r2), std::min(a.v + r1, b.v + r2)};
  if (rect.u_lo > rect.u_hi || rect.v_lo > rect.v_hi) return std::nullopt;
  return rect;
}

RectDims rect_dims(const OverlapRect& rect) {
  RectDims dims;
  for (int parity : {0, 1}) {
    dims.u_count[parity] = count_with_parity(rect.u_lo, rect.u_hi, parity);
    dims.v_count[parity] = count_with_parity(rect.v_lo, rect.v_hi, parity);
  }
  const Coord even = dims.u_count[0] * dims.v_count[0];
  const Coord odd = dims.u_count[1] * dims.v_count[1];
  if (even + odd == 0) {
    std::ostringstream os;
    os << "overlap rectangle [" << rect.u_lo << ',' << rect.u_hi << "]x[" << rect.v_lo << ','
       << rect.v_hi << "] contains no pixel";
    throw DegenerateOverlap(os.str());
  }
  dims.majority_parity = odd > even ? 1 : 0;
  dims.k = dims.u_count[dims.majority_parity];
  dims.n = dims.v_count[dims.majority_parity];
  return dims;
}

Coord overlap_pixel_count(const DiscPair& p) {
  const auto rect = overlap_rectangle(p);
  if (!rect) return 0;
  Coord total = 0;
  for (int parity : {0, 1}) {
    total += count_with_parity(rect->u_lo, rect->u_hi, parity) *
             count_with_parity(rect->v_lo, rect->v_hi, parity);
  }
  return total;
}

RegimeSet classify_pair(const DiscPair& p) {
  RegimeSet set;
  const PixelPoint a = p.first.center();
  const PixelPoint b = p.second.center();
  const Coord r1 = p.first.radius();
  const Coord r2 = p.second.radius();
  const bool collinear = a.x == b.x || a.y == b.y;
  if (collinear) set.add(Regime::collinear);

  if (overlap_pixel_count(p) == 0) return set.add(Regime::disjoint);
  // Nested discs with a shared centre: no hypothesis covers them.
  if (a == b) return set.add(Regime::other);

  if (circles_meet(a, r1, b, r2)) {
    set.add(Regime::thm1);
    if (collinear) set.add(Regime::thm3);
  } else {
    if (circles_meet(a, r1 - 1, b, r2)) set.add(Regime::thm2);
    if (collinear) set.add(Regime::corollary);
  }
  if (!set.has(Regime::thm1) && !set.has(Regime::thm2) && !set.has(Regime::corollary)) {
    set.add(Regime::other);
  }
  return set;
}

Coord intersection_cardinality_oracle(const DiscPair& p, Coord cap) {
  return intersection_cardinality(enumerate_disc(p.first, cap), enumerate_disc(p.second, cap));
}

Coord m_closed_thm1(const DiscPair& p, const RectDims& dims) {
  require_regime(p, Regime::thm1, "m_closed_thm1");
  const Wide k = dims.k;
  const Wide n = dims.n;
  return narrow(2 * (disc_cards_sum(p) - 2 * k * n + k + n), "m_closed_thm1");
}

Coord m_closed_thm2(const DiscPair& p, const RectDims& dims) {
  require_regime(p, Regime::thm2, "m_closed_thm2");
  const Wide k = dims.k;
  const Wide n = dims.n;
  return narrow(2 * (disc_cards_sum(p) + 1 - 2 * k * n), "m_closed_thm2");
}

Coord m_closed_thm3(const DiscPair& p) {
  const AxisOffset axis = require_thm3_setting(p, "m_closed_thm3");
  const Wide r1 = p.first.radius();
  const Wide r2 = p.second.radius();
  const Wide d = axis.distance;
  return narrow((r1 - r2) * (r1 - r2) + 2 * (r1 + r2 + 1) * d - d * d, "m_closed_thm3");
}

DigitalDisc thm3_overlap_disc(const DiscPair& p) {
  const AxisOffset axis = require_thm3_setting(p, "thm3_overlap_disc");
  const Coord r1 = p.first.radius();
  const Coord r2 = p.second.radius();
  const Coord shift = axis.direction * (r1 + axis.distance - r2) / 2;
  const PixelPoint a = p.first.center();
  const PixelPoint centre = axis.horizontal ? PixelPoint{a.x + shift, a.y} : PixelPoint{a.x, a.y + shift};
  return {centre, (r1 + r2 - axis.distance) / 2};
}

Coord m_closed_corollary(const DiscPair& p, CorollaryReading reading) {
  require_regime(p, Regime::corollary, "m_closed_corollary");
  const auto axis = axis_offset(p.first.center(), p.second.center());
  const Wide d = axis->distance;
  // twice r0; r0 itself may be a half-integer.
  const Wide twice_r0 = Wide{p.first.radius()} - 1 + p.second.radius() +
                        (reading == CorollaryReading::printed ? d : -d);
  // 2(S - 2 r0^2 - 4 r0 + 1) = 2(S + 1) - (2 r0)^2 - 4 (2 r0)
  return narrow(2 * (disc_cards_sum(p) + 1) - twice_r0 * twice_r0 - 4 * twice_r0,
                "m_closed_corollary");
}

const FormulaCheck* VerificationReport::find(Formula f) const {
  for (const auto& c : checks) {
    if (c.formula == f) return &c;
  }
  return nullptr;
}

bool VerificationReport::disagrees_on(FormulaSet formulas) const {
  return std::any_of(checks.begin(), checks.end(),
                     [&](const FormulaCheck& c) { return formulas.has(c.formula) && !c.agrees; });
}

VerificationReport verify_pair(const DiscPair& p, Coord cap) {
  VerificationReport report(p);
  report.regime = classify_pair(p);
  const PixelSet a = enumerate_disc(p.first, cap);
  const PixelSet b = enumerate_disc(p.second, cap);
  const PixelSet overlap = a & b;
  report.card_first = a.cardinality();
  report.card_second = b.cardinality();
  report.card_intersection = overlap.cardinality();
  report.oracle_m = symmetric_difference_metric(a, b).value;

#ifdef LDISC_VERIFY_IDENTITIES
  if (report.oracle_m != disc_cardinality_closed(p.first.radius()) +
                             disc_cardinality_closed(p.second.radius()) -
                             2 * report.card_intersection) {
    throw std::logic_error("verify_pair: oracle identity violated for " + describe(p));
  }
  if (overlap_pixel_count(p) != report.card_intersection) {
    throw std::logic_error("verify_pair: rectangle pixel count disagrees with enumeration for " +
                           describe(p));
  }
#endif

  if (report.card_intersection > 0) {
    if (const auto rect = overlap_rectangle(p)) report.dims = rect_dims(*rect);
  }

  const auto check = [&](Formula f, Coord closed) {
    report.checks.push_back({f, closed, closed == report.oracle_m});
  };
  if (report.regime.has(Regime::thm1)) check(Formula::thm1, m_closed_thm1(p, *report.dims));
  if (report.regime.has(Regime::thm2)) check(Formula::thm2, m_closed_thm2(p, *report.dims));
  if (report.regime.has(Regime::thm3)) {
    check(Formula::thm3, m_closed_thm3(p));
    report.overlap_is_predicted_disc = overlap == enumerate_disc(thm3_overlap_disc(p), cap);
  }
  if (report.regime.has(Regime::corollary)) {
    check(Formula::corollary, m_closed_corollary(p, CorollaryReading::printed));
    check(Formula::corollary_corrected, m_closed_corollary(p, CorollaryReading::sign_corrected));
  }
  return report;
}

namespace {

bool any_selected_applies(RegimeSet regime, FormulaSet formulas) {
  return (formulas.has(Formula::thm1) && regime.has(Regime::thm1)) ||
         (formulas.has(Formula::thm2) && regime.has(Regime::thm2)) ||
         (formulas.has(Formula::thm3) && regime.has(Regime::thm3)) ||
         ((formulas.has(Formula::corollary) || formulas.has(Formula::corollary_corrected)) &&
          regime.has(Regime::corollary));
}

struct SweepSlice {
  std::int64_t pairs_checked = 0;
  std::vector<VerificationReport> disagreements;
};

SweepSlice sweep_first_radius(Coord r1, const SweepOptions& options) {
  SweepSlice slice;
  const DigitalDisc first({0, 0}, r1);
  for (Coord r2 = 0; r2 <= options.max_radius; ++r2) {
    for (Coord gamma = 0; gamma <= options.max_offset; ++gamma) {
      for (Coord delta = 0; delta <= options.max_offset; ++delta) {
        const DiscPair pair{first, DigitalDisc({gamma, delta}, r2)};
        if (!any_selected_applies(classify_pair(pair), options.formulas)) continue;
        ++slice.pairs_checked;
        VerificationReport report = verify_pair(pair, options.enumeration_cap);
        if (report.disagrees_on(options.formulas)) {
          slice.disagreements.push_back(std::move(report));
        }
      }
    }
  }
  return slice;
}

}  // namespace

SweepResult counterexample_search(const SweepOptions& options) {
  if (options.max_radius < 0 || options.max_offset < 0) {
    throw DomainError("counterexample_search: bounds must be nonnegative");
  }
  if (options.max_radius > options.enumeration_cap) {
    throw CapExceeded("counterexample_search: max radius " + std::to_string(options.max_radius) +
                      " exceeds the enumeration cap " + std::to_string(options.enumeration_cap));
  }
  if (options.max_offset > kCoordinateBound) {
    throw DomainError("counterexample_search: max offset exceeds the coordinate bound");
  }

  const auto radii = static_cast<std::size_t>(options.max_radius + 1);
  std::vector<SweepSlice> slices(radii);
  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(radii));

  // Larger first radii cost more; hand them out first.
  std::atomic<Coord> next{options.max_radius};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (Coord r1 = next--; r1 >= 0 && !failed; r1 = next--) {
          try {
            slices[static_cast<std::size_t>(r1)] = sweep_first_radius(r1, options);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  for (auto& slice : slices) {
    result.pairs_checked += slice.pairs_checked;
    for (auto& r : slice.disagreements) result.disagreements.push_back(std::move(r));
  }
  return result;
}

}  // namespace ldisc
