// ldisc: digital L1 discs on the integer plane.
//
//   ldisc card --disc 3 --circle 0
//   ldisc metric --scene pair.scene A B
//   ldisc verify --max-radius 12 --max-offset 24 --formulas thm1,thm2,thm3 --out report.tsv
//   ldisc render --scene pair.scene --format ascii

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldisc/commands.hpp"

namespace {

using namespace ldisc;
using namespace ldisc::cli;

struct GlobalFlags {
  std::string scene;
  std::string format = "ascii";
  std::string out;
  Coord max_radius = 12;
  Coord max_offset = 24;
  std::string formulas = "thm1,thm2,thm3";
  Coord enum_cap = kDefaultEnumerationCap;
  unsigned threads = 0;
};

std::optional<TableStyle> table_style(const std::string& format) {
  if (format == "ascii" || format == "text") return TableStyle::text;
  if (format == "tsv") return TableStyle::tsv;
  return std::nullopt;
}

// Loads --scene, mapping failures to their exit codes.
std::optional<Scene> scene_from(const GlobalFlags& flags, int& exit_code) {
  if (flags.scene.empty()) {
    std::cerr << "--scene <path> is required\n";
    exit_code = kUsage;
    return std::nullopt;
  }
  try {
    return load_scene(flags.scene);
  } catch (const SceneError& e) {
    std::cerr << e.what() << '\n';
    exit_code = exit_code_for(e);
    return std::nullopt;
  }
}

std::optional<std::filesystem::path> out_path(const GlobalFlags& flags) {
  if (flags.out.empty() || flags.out == "-") return std::nullopt;
  return std::filesystem::path(flags.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact L1 digital discs: cardinalities, proximity metrics, closed-form verification"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--scene", flags.scene, "Scene file (label center_x center_y radius per line)");
  app.add_option("--format", flags.format, "ascii|pixmap|vector|tsv")->capture_default_str();
  app.add_option("--out", flags.out, "Output path (default: stdout)");
  app.add_option("--max-radius", flags.max_radius, "verify: largest radius swept")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-offset", flags.max_offset, "verify: second centre over [0,N]^2")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--formulas", flags.formulas,
                 "verify: comma list of thm1,thm2,thm3,corollary,corollary_corrected,all")
      ->capture_default_str();
  app.add_option("--enum-cap", flags.enum_cap, "Largest radius enumerated pixel by pixel")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", flags.threads, "verify: worker threads (0 = all cores)");

  auto* card = app.add_subcommand("card", "Closed-form vs enumerated circle/disc cardinalities");
  std::vector<Coord> disc_radii;
  std::vector<Coord> circle_radii;
  card->add_option("--disc", disc_radii, "Disc radius (repeatable)");
  card->add_option("--circle", circle_radii, "Circle radius (repeatable)");

  auto* metric = app.add_subcommand("metric", "Proximity of two labelled discs of a scene");
  std::string label_a;
  std::string label_b;
  metric->add_option("label_a", label_a, "First disc label")->required();
  metric->add_option("label_b", label_b, "Second disc label")->required();

  app.add_subcommand("verify", "Sweep disc pairs and check closed forms against enumeration");

  auto* render_cmd = app.add_subcommand("render", "Draw one or two discs of a scene");
  std::vector<std::string> render_labels;
  bool boundary_only = false;
  render_cmd->add_option("labels", render_labels, "Labels to draw (at most two)");
  render_cmd->add_flag("--boundary", boundary_only, "Draw boundary circles only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  int exit_code = kOk;

  if (card->parsed() || metric->parsed()) {
    const auto style = table_style(flags.format);
    if (!style) {
      std::cerr << "--format " << flags.format << " is not supported here (use ascii or tsv)\n";
      return kUsage;
    }
    if (card->parsed()) {
      return cmd_card({disc_radii, circle_radii, flags.enum_cap, *style}, std::cout, std::cerr);
    }
    auto scene = scene_from(flags, exit_code);
    if (!scene) return exit_code;
    return cmd_metric({std::move(*scene), label_a, label_b, flags.enum_cap, *style}, std::cout,
                      std::cerr);
  }

  if (app.got_subcommand("verify")) {
    VerifyRequest request;
    request.sweep.max_radius = flags.max_radius;
    request.sweep.max_offset = flags.max_offset;
    request.sweep.enumeration_cap = flags.enum_cap;
    request.sweep.threads = flags.threads;
    try {
      request.sweep.formulas = parse_formula_list(flags.formulas);
    } catch (const Error& e) {
      std::cerr << e.what() << '\n';
      return kUsage;
    }
    request.report_path = out_path(flags);
    return cmd_verify(request, std::cout, std::cerr);
  }

  // render
  const auto format = parse_render_format(flags.format);
  if (!format) {
    std::cerr << "render: unsupported format '" << flags.format << "' (ascii, pixmap or vector)\n";
    return kUsage;
  }
  auto scene = scene_from(flags, exit_code);
  if (!scene) return exit_code;
  RenderRequest request{std::move(*scene), render_labels, {}, out_path(flags)};
  request.options.format = *format;
  request.options.boundary_only = boundary_only;
  return cmd_render(request, std::cout, std::cerr);
}
