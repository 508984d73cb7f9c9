#pragma once

// Subcommand implementations behind the `ldisc` executable. Each command
// writes to the given streams and returns the process exit code, so tests
// can drive them in-process.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ldisc/proximity.hpp"
#include "ldisc/render.hpp"
#include "ldisc/scene.hpp"

namespace ldisc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,  // I/O failures, unreadable scene, unwritable output
  kDisagreement = 3,
  kParseError = 4,
  kValidationError = 5,
};

int exit_code_for(const SceneError& e);

enum class TableStyle { text, tsv };

struct CardRequest {
  std::vector<Coord> disc_radii;
  std::vector<Coord> circle_radii;
  Coord enumeration_cap = kDefaultEnumerationCap;
  TableStyle style = TableStyle::text;
};

int cmd_card(const CardRequest& request, std::ostream& out, std::ostream& err);

struct MetricRequest {
  Scene scene;
  std::string label_a;
  std::string label_b;
  Coord enumeration_cap = kDefaultEnumerationCap;
  TableStyle style = TableStyle::text;
};

int cmd_metric(const MetricRequest& request, std::ostream& out, std::ostream& err);

struct VerifyRequest {
  SweepOptions sweep;
  std::optional<std::filesystem::path> report_path;  // report goes to `out` when absent
};

// TSV report, one row per disagreeing selected formula.
void write_verify_report(const SweepResult& result, FormulaSet formulas, std::ostream& out);
std::string verify_summary(const SweepResult& result, const SweepOptions& sweep);

int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err);

struct RenderRequest {
  Scene scene;
  std::vector<std::string> labels;  // empty: every disc in the scene (at most two)
  RenderOptions options;
  std::optional<std::filesystem::path> output_path;  // `out` when absent
};

int cmd_render(const RenderRequest& request, std::ostream& out, std::ostream& err);

}  // namespace ldisc::cli
