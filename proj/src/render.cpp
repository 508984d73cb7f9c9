#include "ldisc/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace ldisc {

namespace {

enum class Cell { empty, first, second, both };

constexpr Coord kMaxCells = Coord{1} << 24;

class Raster {
 public:
  Raster(const Scene& scene, const RenderOptions& options)
      : window_(render_window(scene)), boundary_only_(options.boundary_only) {
    if (scene.discs.size() > 2) {
      throw DomainError("render: at most two discs can be drawn, the scene has " +
                        std::to_string(scene.discs.size()));
    }
    if (width() * height() > kMaxCells) {
      throw DomainError("render: window of " + std::to_string(width()) + "x" +
                        std::to_string(height()) + " cells is too large");
    }
    for (const auto& d : scene.discs) discs_.push_back(d.disc);
  }

  const RenderWindow& window() const { return window_; }
  Coord width() const { return window_.x_max - window_.x_min + 1; }
  Coord height() const { return window_.y_max - window_.y_min + 1; }

  // Row 0 is the top row (y_max).
  Cell at(Coord col, Coord row) const {
    const PixelPoint p{window_.x_min + col, window_.y_max - row};
    const bool in1 = discs_.size() > 0 && covers(discs_[0], p);
    const bool in2 = discs_.size() > 1 && covers(discs_[1], p);
    if (in1 && in2) return Cell::both;
    if (in1) return Cell::first;
    if (in2) return Cell::second;
    return Cell::empty;
  }

  bool has_origin() const {
    return window_.x_min <= 0 && 0 <= window_.x_max && window_.y_min <= 0 && 0 <= window_.y_max;
  }
  Coord origin_col() const { return -window_.x_min; }
  Coord origin_row() const { return window_.y_max; }

 private:
  bool covers(const DigitalDisc& d, PixelPoint p) const {
    const Coord dist = l1_distance(d.center(), p);
    return boundary_only_ ? dist == d.radius() : dist <= d.radius();
  }

  RenderWindow window_;
  bool boundary_only_;
  std::vector<DigitalDisc> discs_;
};

Rgb color_of(Cell c) {
  switch (c) {
    case Cell::first: return kFirstColor;
    case Cell::second: return kSecondColor;
    case Cell::both: return kOverlapColor;
    case Cell::empty: break;
  }
  return kBackgroundColor;
}

std::string render_ascii(const Raster& raster, bool boundary_only) {
  const RenderWindow& w = raster.window();
  const std::size_t label_width =
      std::max(std::to_string(w.y_min).size(), std::to_string(w.y_max).size());

  std::ostringstream os;
  os << "x=[" << w.x_min << ',' << w.x_max << "] y=[" << w.y_min << ',' << w.y_max << "]\n";
  for (Coord row = 0; row < raster.height(); ++row) {
    const std::string y = std::to_string(w.y_max - row);
    os << std::string(label_width - y.size(), ' ') << y << ' ';
    for (Coord col = 0; col < raster.width(); ++col) {
      const Cell c = raster.at(col, row);
      char ch = '.';
      if (boundary_only) {
        ch = c == Cell::both ? 'X' : c == Cell::empty ? '.' : 'o';
      } else {
        ch = c == Cell::both ? 'X' : c == Cell::first ? '1' : c == Cell::second ? '2' : '.';
      }
      os << ch;
    }
    os << '\n';
  }
  // Ruler: the x = 0 column is marked '0'.
  os << std::string(label_width + 1, ' ');
  for (Coord col = 0; col < raster.width(); ++col) os << (w.x_min + col == 0 ? '0' : '-');
  os << '\n';
  return os.str();
}

std::string render_pixmap(const Raster& raster, int cell) {
  const Coord img_w = raster.width() * cell + 1;
  const Coord img_h = raster.height() * cell + 1;
  std::string out = "P6\n" + std::to_string(img_w) + ' ' + std::to_string(img_h) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(img_w * img_h * 3));
  const int dot_lo = cell / 2 - 1;
  const int dot_hi = cell / 2;
  for (Coord py = 0; py < img_h; ++py) {
    for (Coord px = 0; px < img_w; ++px) {
      Rgb c = kGridColor;
      if (px % cell != 0 && py % cell != 0) {
        const Coord col = px / cell;
        const Coord row = py / cell;
        c = color_of(raster.at(col, row));
        const Coord ix = px % cell;
        const Coord iy = py % cell;
        // Origin marker: a small black dot in the middle of the cell.
        if (raster.has_origin() && col == raster.origin_col() && row == raster.origin_row() &&
            ix >= dot_lo && ix <= dot_hi && iy >= dot_lo && iy <= dot_hi) {
          c = kGridColor;
        }
      }
      out.push_back(static_cast<char>(c.r));
      out.push_back(static_cast<char>(c.g));
      out.push_back(static_cast<char>(c.b));
    }
  }
  return out;
}

std::string hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

const char* class_of(Cell c) {
  switch (c) {
    case Cell::first: return "first";
    case Cell::second: return "second";
    case Cell::both: return "overlap";
    case Cell::empty: break;
  }
  return "empty";
}

std::string render_vector(const Raster& raster, int cell) {
  const RenderWindow& w = raster.window();
  const Coord img_w = raster.width() * cell;
  const Coord img_h = raster.height() * cell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << img_w << "\" height=\"" << img_h
     << "\" viewBox=\"0 0 " << img_w << ' ' << img_h << "\">\n";
  os << "<!-- x=[" << w.x_min << ',' << w.x_max << "] y=[" << w.y_min << ',' << w.y_max
     << "], y up -->\n";
  os << "<rect width=\"" << img_w << "\" height=\"" << img_h << "\" fill=\""
     << hex(kBackgroundColor) << "\"/>\n";
  for (Coord row = 0; row < raster.height(); ++row) {
    for (Coord col = 0; col < raster.width(); ++col) {
      const Cell c = raster.at(col, row);
      if (c == Cell::empty) continue;
      os << "<rect class=\"" << class_of(c) << "\" x=\"" << col * cell << "\" y=\"" << row * cell
         << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"" << hex(color_of(c))
         << "\"/>\n";
    }
  }
  os << "<g stroke=\"" << hex(kGridColor) << "\" stroke-width=\"1\">\n";
  for (Coord col = 0; col <= raster.width(); ++col) {
    os << "<line x1=\"" << col * cell << "\" y1=\"0\" x2=\"" << col * cell << "\" y2=\"" << img_h
       << "\"/>\n";
  }
  for (Coord row = 0; row <= raster.height(); ++row) {
    os << "<line x1=\"0\" y1=\"" << row * cell << "\" x2=\"" << img_w << "\" y2=\"" << row * cell
       << "\"/>\n";
  }
  os << "</g>\n";
  if (raster.has_origin()) {
    const Coord cx = raster.origin_col() * cell + cell / 2;
    const Coord cy = raster.origin_row() * cell + cell / 2;
    os << "<circle class=\"origin\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << cell / 6 + 1
       << "\" fill=\"" << hex(kGridColor) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::optional<RenderFormat> parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "pixmap" || name == "ppm") return RenderFormat::pixmap;
  if (name == "vector" || name == "svg") return RenderFormat::vector;
  return std::nullopt;
}

RenderWindow render_window(const Scene& scene) {
  if (scene.window) return *scene.window;
  if (scene.discs.empty()) return {-1, 1, -1, 1};
  RenderWindow w{kCoordinateBound, -kCoordinateBound, kCoordinateBound, -kCoordinateBound};
  for (const auto& d : scene.discs) {
    const PixelPoint c = d.disc.center();
    const Coord r = d.disc.radius();
    w.x_min = std::min(w.x_min, c.x - r);
    w.x_max = std::max(w.x_max, c.x + r);
    w.y_min = std::min(w.y_min, c.y - r);
    w.y_max = std::max(w.y_max, c.y + r);
  }
  return {w.x_min - 1, w.x_max + 1, w.y_min - 1, w.y_max + 1};
}

std::string render(const Scene& scene, const RenderOptions& options) {
  if (options.cell_size < 4) throw DomainError("render: cell size must be at least 4");
  const Raster raster(scene, options);
  switch (options.format) {
    case RenderFormat::ascii: return render_ascii(raster, options.boundary_only);
    case RenderFormat::pixmap: return render_pixmap(raster, options.cell_size);
    case RenderFormat::vector: return render_vector(raster, options.cell_size);
  }
  throw DomainError("render: unsupported format");
}

}  // namespace ldisc
