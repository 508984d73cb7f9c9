#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <climits>
#include <random>

#include "ldisc/error.hpp"
#include "ldisc/set_metrics.hpp"

using namespace ldisc;

namespace {

// Test-only Hausdorff oracle: full max-min scan, no early exit.
Coord hausdorff_oracle(const PixelSet& a, const PixelSet& b) {
  auto directed = [](const PixelSet& from, const PixelSet& to) {
    Coord worst = 0;
    for (const auto& p : from) {
      Coord best = LLONG_MAX;
      for (const auto& q : to) best = std::min(best, std::abs(p.x - q.x) + std::abs(p.y - q.y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

PixelSet random_set(std::mt19937_64& rng, int max_size, Coord span) {
  std::uniform_int_distribution<int> size(1, max_size);
  std::uniform_int_distribution<Coord> coord(-span, span);
  std::vector<PixelPoint> pts;
  for (int k = size(rng); k > 0; --k) pts.push_back({coord(rng), coord(rng)});
  return PixelSet(std::move(pts));
}

}  // namespace

TEST_CASE("symmetric difference metric examples") {
  const PixelSet d0 = enumerate_disc({{0, 0}, 1});
  CHECK(symmetric_difference_metric(d0, d0).value == 0);
  CHECK(symmetric_difference_metric(d0, enumerate_disc({{2, 0}, 1})).value == 8);
  CHECK(symmetric_difference_metric(enumerate_disc({{0, 0}, 2}), enumerate_disc({{2, 0}, 2})).value ==
        16);
}

TEST_CASE("symmetric difference metric accepts empty sets") {
  const PixelSet b = enumerate_disc({{3, 3}, 2});
  CHECK(symmetric_difference_metric(PixelSet{}, b).value == b.cardinality());
  CHECK(symmetric_difference_metric(PixelSet{}, PixelSet{}).value == 0);
}

TEST_CASE("metric axioms and algebraic forms on random sets") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 400; ++i) {
    const PixelSet a = random_set(rng, 25, 4);
    const PixelSet b = random_set(rng, 25, 4);
    const PixelSet c = random_set(rng, 25, 4);
    const Coord ab = symmetric_difference_metric(a, b).value;
    CHECK(ab == (a ^ b).cardinality());
    CHECK(ab == (a - b).cardinality() + (b - a).cardinality());
    CHECK(ab == a.cardinality() + b.cardinality() - 2 * (a & b).cardinality());
    CHECK(ab == symmetric_difference_metric(b, a).value);
    CHECK((ab == 0) == (a == b));
    CHECK(symmetric_difference_metric(a, c).value <= ab + symmetric_difference_metric(b, c).value);
    if (!(a & b).empty() && a.cardinality() != b.cardinality()) CHECK(ab != 0);
  }
}

TEST_CASE("hausdorff examples") {
  CHECK(hausdorff_distance(PixelSet{{0, 0}}, PixelSet{{3, 4}}).value == 7);
  const PixelSet d = enumerate_disc({{0, 0}, 1});
  CHECK(hausdorff_distance(d, d).value == 0);
  CHECK(hausdorff_distance(d, enumerate_disc({{5, 0}, 1})).value == 5);
}

TEST_CASE("hausdorff of a proper subset is positive") {
  // Intersecting sets need not be at distance 0: only equal sets are.
  const PixelSet small = enumerate_disc({{0, 0}, 1});
  const PixelSet big = enumerate_disc({{0, 0}, 3});
  CHECK(hausdorff_distance(small, big).value == 2);
  CHECK(directed_hausdorff(small, big) == 0);
  CHECK(directed_hausdorff(big, small) == 2);
}

TEST_CASE("hausdorff rejects empty sets") {
  CHECK_THROWS_AS(hausdorff_distance(PixelSet{}, PixelSet{{0, 0}}), DomainError);
  CHECK_THROWS_AS(hausdorff_distance(PixelSet{{0, 0}}, PixelSet{}), DomainError);
}

TEST_CASE("hausdorff matches the full-scan oracle and is a metric") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const PixelSet a = random_set(rng, 20, 6);
    const PixelSet b = random_set(rng, 20, 6);
    const PixelSet c = random_set(rng, 20, 6);
    const Coord ab = hausdorff_distance(a, b).value;
    CHECK(ab == hausdorff_oracle(a, b));
    CHECK(ab == hausdorff_distance(b, a).value);
    CHECK((ab == 0) == (a == b));
    CHECK(hausdorff_distance(a, c).value <= ab + hausdorff_distance(b, c).value);
  }
}

TEST_CASE("both metrics are translation invariant") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<Coord> shift(-1000, 1000);
  for (int i = 0; i < 100; ++i) {
    const PixelSet a = random_set(rng, 15, 5);
    const PixelSet b = random_set(rng, 15, 5);
    const PixelPoint t{shift(rng), shift(rng)};
    CHECK(symmetric_difference_metric(a, b) ==
          symmetric_difference_metric(a.translated(t), b.translated(t)));
    CHECK(hausdorff_distance(a, b) == hausdorff_distance(a.translated(t), b.translated(t)));
  }
}
