#pragma once

// Grid renderings of one or two discs: ASCII, binary PPM (P6) and SVG.
//
// ASCII cells: '.' empty, '1' first disc only, '2' second disc only, 'X' both.
// In boundary mode only circle pixels are drawn: 'o' on one boundary,
// 'X' on both.

#include <optional>
#include <string>
#include <string_view>

#include "ldisc/scene.hpp"

namespace ldisc {

enum class RenderFormat { ascii, pixmap, vector };

std::optional<RenderFormat> parse_render_format(std::string_view name);

struct RenderOptions {
  RenderFormat format = RenderFormat::ascii;
  bool boundary_only = false;
  int cell_size = 8;  // pixmap / vector only
};

struct Rgb {
  unsigned char r, g, b;
};

inline constexpr Rgb kFirstColor{255, 0, 0};
inline constexpr Rgb kSecondColor{0, 0, 255};
inline constexpr Rgb kOverlapColor{0, 160, 0};
inline constexpr Rgb kGridColor{0, 0, 0};
inline constexpr Rgb kBackgroundColor{255, 255, 255};

// The scene's window, or the bounding box of its discs padded by one cell.
// An empty scene without a window gets the 3x3 block around the origin.
RenderWindow render_window(const Scene& scene);

// Renders the scene's discs (at most two; DomainError otherwise). Output is
// a byte string, binary for the pixmap format.
std::string render(const Scene& scene, const RenderOptions& options = {});

}  // namespace ldisc
