#pragma once

// Scene files: one disc per line as `label center_x center_y radius`,
// `#` starts a comment, and an optional `window x_min x_max y_min y_max`
// record fixes the render window.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldisc/error.hpp"
#include "ldisc/lattice.hpp"

namespace ldisc {

struct LabeledDisc {
  std::string label;
  DigitalDisc disc;
};

// Inclusive pixel bounds, y increasing upward.
struct RenderWindow {
  Coord x_min = 0;
  Coord x_max = 0;
  Coord y_min = 0;
  Coord y_max = 0;

  friend constexpr bool operator==(const RenderWindow&, const RenderWindow&) = default;
};

struct Scene {
  std::vector<LabeledDisc> discs;
  std::optional<RenderWindow> window;

  const LabeledDisc* find(std::string_view label) const;
};

inline constexpr std::size_t kMaxLabelLength = 32;

enum class SceneErrorKind { io, parse, validation };

class SceneError : public Error {
 public:
  SceneError(SceneErrorKind kind, const std::string& message, int line = 0, int column = 0)
      : Error(message), kind_(kind), line_(line), column_(column) {}

  SceneErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  SceneErrorKind kind_;
  int line_;
  int column_;
};

// Diagnostics read "<source>:<line>:<column>: <message>".
Scene parse_scene(std::string_view text, std::string_view source = "<scene>");
Scene load_scene(const std::filesystem::path& path);

}  // namespace ldisc
