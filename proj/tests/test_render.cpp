#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ldisc/error.hpp"
#include "ldisc/proximity.hpp"
#include "ldisc/render.hpp"
#include "support/render_probe.hpp"

using namespace ldisc;

namespace {

Scene two(DigitalDisc a, DigitalDisc b) { return Scene{{{"A", a}, {"B", b}}, std::nullopt}; }

RenderOptions opts(RenderFormat f, bool boundary = false) {
  RenderOptions o;
  o.format = f;
  o.boundary_only = boundary;
  return o;
}

}  // namespace

TEST_CASE("render window") {
  CHECK(render_window(Scene{}) == RenderWindow{-1, 1, -1, 1});
  CHECK(render_window(two({{0, 0}, 2}, {{2, 0}, 2})) == RenderWindow{-3, 5, -3, 3});
  Scene s = two({{0, 0}, 2}, {{2, 0}, 2});
  s.window = RenderWindow{0, 1, 0, 1};
  CHECK(render_window(s) == RenderWindow{0, 1, 0, 1});
}

TEST_CASE("ascii render of a single disc") {
  const Scene s{{{"A", DigitalDisc({0, 0}, 1)}}, std::nullopt};
  CHECK(render(s) ==
        "x=[-2,2] y=[-2,2]\n"
        " 2 .....\n"
        " 1 ..1..\n"
        " 0 .111.\n"
        "-1 ..1..\n"
        "-2 .....\n"
        "   --0--\n");
}

TEST_CASE("ascii overlap cells equal the enumerated intersection") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coord> radius(0, 9);
  std::uniform_int_distribution<Coord> coord(-8, 8);
  for (int i = 0; i < 200; ++i) {
    const DiscPair p{DigitalDisc({coord(rng), coord(rng)}, radius(rng)),
                     DigitalDisc({coord(rng), coord(rng)}, radius(rng))};
    const std::string text = render(two(p.first, p.second));
    const long both = probe::count_ascii(text, 'X');
    CHECK(both == intersection_cardinality_oracle(p));
    CHECK(both + probe::count_ascii(text, '1') == disc_cardinality_closed(p.first.radius()));
    CHECK(both + probe::count_ascii(text, '2') == disc_cardinality_closed(p.second.radius()));

    const std::string edge = render(two(p.first, p.second), opts(RenderFormat::ascii, true));
    const Coord shared =
        intersection_cardinality(enumerate_circle(DigitalCircle(p.first.center(), p.first.radius())),
                                 enumerate_circle(DigitalCircle(p.second.center(), p.second.radius())));
    CHECK(probe::count_ascii(edge, 'X') == shared);
  }
}

TEST_CASE("pixmap") {
  const Scene s = two({{0, 0}, 3}, {{2, 0}, 2});
  const std::string bytes = render(s, opts(RenderFormat::pixmap));
  probe::Pixmap img;
  REQUIRE(probe::read_ppm(bytes, img));
  CHECK(img.width == 10 * 8 + 1);
  CHECK(img.height == 9 * 8 + 1);
  CHECK(probe::count_cells(img, 8, kOverlapColor) == 8);
  CHECK(probe::count_cells(img, 8, kFirstColor) == 25 - 8);
  CHECK(probe::count_cells(img, 8, kSecondColor) == 13 - 8);
  CHECK(probe::same(img.at(0, 0), kGridColor));
  // Origin dot sits in the cell of (0,0): column 4, row 4.
  CHECK(probe::same(img.at(4 * 8 + 4, 4 * 8 + 4), kGridColor));
  CHECK(probe::same(img.at(4 * 8 + 1, 4 * 8 + 1), kOverlapColor));
}

TEST_CASE("vector") {
  const std::string svg = render(two({{0, 0}, 2}, {{2, 0}, 2}), opts(RenderFormat::vector));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(probe::count(svg, "class=\"overlap\"") == 5);
  CHECK(probe::count(svg, "class=\"first\"") == 8);
  CHECK(probe::count(svg, "class=\"second\"") == 8);
  CHECK(probe::count(svg, "class=\"origin\"") == 1);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
}

TEST_CASE("empty scene renders a blank grid") {
  CHECK(render(Scene{}) == "x=[-1,1] y=[-1,1]\n 1 ...\n 0 ...\n-1 ...\n   -0-\n");
  probe::Pixmap img;
  REQUIRE(probe::read_ppm(render(Scene{}, opts(RenderFormat::pixmap)), img));
  CHECK(probe::count_cells(img, 8, kBackgroundColor) == 9);
}

TEST_CASE("render is deterministic") {
  const Scene s = two({{0, 0}, 5}, {{3, -1}, 4});
  for (auto f : {RenderFormat::ascii, RenderFormat::pixmap, RenderFormat::vector})
    CHECK(render(s, opts(f)) == render(s, opts(f)));
}

TEST_CASE("render guards") {
  Scene s = two({{0, 0}, 1}, {{1, 0}, 1});
  s.discs.push_back({"C", DigitalDisc({0, 0}, 1)});
  CHECK_THROWS_AS(render(s), DomainError);
  CHECK_THROWS_AS(render(two({{0, 0}, 5000}, {{0, 0}, 1})), DomainError);
  CHECK(parse_render_format("svg") == RenderFormat::vector);
  CHECK(parse_render_format("ppm") == RenderFormat::pixmap);
  CHECK_FALSE(parse_render_format("png").has_value());
}
