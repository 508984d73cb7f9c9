#include "ldisc/scene.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ldisc {

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(SceneErrorKind kind, int line, int column, const std::string& what) const {
    std::ostringstream os;
    os << source_ << ':' << line << ':' << column << ": "
       << (kind == SceneErrorKind::parse ? "parse error: " : "invalid scene: ") << what;
    throw SceneError(kind, os.str(), line, column);
  }

  Coord number(const Token& t, int line, const char* what) const {
    Coord value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
      fail(SceneErrorKind::validation, line, t.column,
           std::string(what) + " '" + std::string(t.text) + "' is out of range");
    }
    if (ec != std::errc{} || ptr != last) {
      fail(SceneErrorKind::parse, line, t.column,
           std::string("malformed ") + what + " '" + std::string(t.text) + "'");
    }
    if (value < -kCoordinateBound || value > kCoordinateBound) {
      fail(SceneErrorKind::validation, line, t.column,
           std::string(what) + " " + std::to_string(value) + " exceeds the coordinate bound 2^30");
    }
    return value;
  }

 private:
  std::string_view source_;
};

}  // namespace

const LabeledDisc* Scene::find(std::string_view label) const {
  const auto it = std::find_if(discs.begin(), discs.end(),
                               [&](const LabeledDisc& d) { return d.label == label; });
  return it == discs.end() ? nullptr : &*it;
}

Scene parse_scene(std::string_view text, std::string_view source) {
  const Parser parser(source);
  Scene scene;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0].text == "window") {
      if (tokens.size() != 5) {
        parser.fail(SceneErrorKind::parse, line_no, tokens[0].column,
                    "window record needs 4 values: x_min x_max y_min y_max");
      }
      if (scene.window) {
        parser.fail(SceneErrorKind::validation, line_no, tokens[0].column, "duplicate window record");
      }
      RenderWindow w{parser.number(tokens[1], line_no, "x_min"),
                     parser.number(tokens[2], line_no, "x_max"),
                     parser.number(tokens[3], line_no, "y_min"),
                     parser.number(tokens[4], line_no, "y_max")};
      if (w.x_min > w.x_max || w.y_min > w.y_max) {
        parser.fail(SceneErrorKind::validation, line_no, tokens[0].column,
                    "window must satisfy x_min <= x_max and y_min <= y_max");
      }
      scene.window = w;
      continue;
    }

    if (tokens.size() != 4) {
      parser.fail(SceneErrorKind::parse, line_no, tokens[0].column,
                  "disc record needs 4 fields: label center_x center_y radius (got " +
                      std::to_string(tokens.size()) + ")");
    }
    const Token& label = tokens[0];
    if (label.text.size() > kMaxLabelLength) {
      parser.fail(SceneErrorKind::validation, line_no, label.column,
                  "label longer than " + std::to_string(kMaxLabelLength) + " characters");
    }
    if (scene.find(label.text) != nullptr) {
      parser.fail(SceneErrorKind::validation, line_no, label.column,
                  "duplicate label '" + std::string(label.text) + "'");
    }
    const Coord cx = parser.number(tokens[1], line_no, "center_x");
    const Coord cy = parser.number(tokens[2], line_no, "center_y");
    const Coord radius = parser.number(tokens[3], line_no, "radius");
    if (radius < 0) {
      parser.fail(SceneErrorKind::validation, line_no, tokens[3].column,
                  "radius must be nonnegative, got " + std::to_string(radius));
    }
    scene.discs.push_back({std::string(label.text), DigitalDisc({cx, cy}, radius)});
  }
  return scene;
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SceneError(SceneErrorKind::io, path.string() + ": cannot open scene file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw SceneError(SceneErrorKind::io, path.string() + ": read error");
  }
  return parse_scene(buffer.str(), path.string());
}

}  // namespace ldisc
