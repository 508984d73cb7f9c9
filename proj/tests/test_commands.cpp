#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ldisc/commands.hpp"

using namespace ldisc;
using namespace ldisc::cli;

namespace {

const Scene kFig2 = parse_scene("A 0 0 2\nB 2 0 2\n");
const Scene kFig3 = parse_scene("A 0 0 3\nB 2 0 2\n");

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("exit codes for scene errors") {
  CHECK(exit_code_for(SceneError(SceneErrorKind::io, "x")) == 2);
  CHECK(exit_code_for(SceneError(SceneErrorKind::parse, "x")) == 4);
  CHECK(exit_code_for(SceneError(SceneErrorKind::validation, "x")) == 5);
}

TEST_CASE("card") {
  std::ostringstream out, err;
  CardRequest req;
  req.disc_radii = {0, 3, 100000};
  req.circle_radii = {0, 5};
  CHECK(cmd_card(req, out, err) == kOk);
  CHECK(out.str() ==
        "kind | radius | closed | enumerated | status\n"
        "disc | 0 | 1 | 1 | ok\n"
        "disc | 3 | 25 | 25 | ok\n"
        "disc | 100000 | 20000200001 | skipped | skipped\n"
        "circle | 0 | domain-error (4r needs r >= 1) | 1 | n/a\n"
        "circle | 5 | 20 | 20 | ok\n");

  std::ostringstream tsv, e2;
  req = {};
  req.disc_radii = {1};
  req.style = TableStyle::tsv;
  CHECK(cmd_card(req, tsv, e2) == kOk);
  CHECK(tsv.str() == "kind\tradius\tclosed\tenumerated\tstatus\ndisc\t1\t5\t5\tok\n");

  std::ostringstream o3, e3;
  CHECK(cmd_card(CardRequest{}, o3, e3) == kUsage);
  req = {};
  req.disc_radii = {-1};
  CHECK(cmd_card(req, o3, e3) == kUsage);
}

TEST_CASE("metric on overlapping discs") {
  std::ostringstream out, err;
  CHECK(cmd_metric({kFig2, "A", "B"}, out, err) == kOk);
  const std::string s = out.str();
  CHECK(s.find("m: 16\n") != std::string::npos);
  CHECK(s.find("d_H: 2\n") != std::string::npos);
  CHECK(s.find("regime: thm1+thm3+collinear\n") != std::string::npos);
  CHECK(s.find("thm1: 16 (oracle 16) ok\n") != std::string::npos);
  CHECK(s.find("thm3: 16 (oracle 16) ok\n") != std::string::npos);
  CHECK(s.find("thm3 overlap disc: (1,0,1) ok\n") != std::string::npos);
}

TEST_CASE("metric reports corollary disagreement") {
  std::ostringstream out, err;
  CHECK(cmd_metric({kFig3, "A", "B"}, out, err) == kOk);
  const std::string s = out.str();
  CHECK(s.find("m: 22\n") != std::string::npos);
  CHECK(s.find("thm2: 22 (oracle 22) ok\n") != std::string::npos);
  CHECK(s.find("corollary: -22 (oracle 22) DISAGREES\n") != std::string::npos);
  CHECK(s.find("corollary_corrected: 26 (oracle 22) DISAGREES\n") != std::string::npos);
}

TEST_CASE("metric errors") {
  std::ostringstream out, err;
  CHECK(cmd_metric({kFig2, "A", "Z"}, out, err) == kUsage);
  CHECK(err.str().find("'Z'") != std::string::npos);
  const Scene big = parse_scene("A 0 0 5000\nB 1 0 5000\n");
  CHECK(cmd_metric({big, "A", "B"}, out, err) == kInputError);
}

TEST_CASE("verify writes a report and signals disagreement") {
  const auto dir = std::filesystem::temp_directory_path() / "ldisc_test_commands";
  std::filesystem::create_directories(dir);

  VerifyRequest clean;
  clean.sweep.max_radius = 6;
  clean.sweep.max_offset = 8;
  clean.sweep.formulas = parse_formula_list("thm1,thm3");
  clean.report_path = dir / "clean.tsv";
  std::ostringstream out, err;
  CHECK(cmd_verify(clean, out, err) == kOk);
  CHECK(slurp(dir / "clean.tsv") == "R1\tR2\tgamma\tdelta\tregime\toracle_m\tclosed_m\tformula\n");
  CHECK(out.str().rfind("verify: formulas=thm1,thm3 max_radius=6 max_offset=8 pairs_checked=", 0) == 0);
  CHECK(out.str().find("disagreeing_pairs=0 disagreements=0\n") != std::string::npos);

  VerifyRequest bad = clean;
  bad.sweep.formulas = parse_formula_list("thm2");
  bad.report_path = dir / "thm2.tsv";
  std::ostringstream o2, e2;
  CHECK(cmd_verify(bad, o2, e2) == kDisagreement);
  const std::string report = slurp(dir / "thm2.tsv");
  CHECK(report.find("\n1\t2\t1\t1\tthm2\t12\t10\tthm2\n") != std::string::npos);

  bad.report_path.reset();
  std::ostringstream o3, e3;
  CHECK(cmd_verify(bad, o3, e3) == kDisagreement);
  CHECK(o3.str().rfind(report, 0) == 0);

  std::filesystem::remove_all(dir);
}

TEST_CASE("verify errors") {
  std::ostringstream out, err;
  VerifyRequest req;
  req.sweep.max_radius = 1;
  req.report_path = "/nonexistent-dir/report.tsv";
  CHECK(cmd_verify(req, out, err) == kInputError);
  CHECK(out.str().empty());

  req.report_path.reset();
  req.sweep.formulas = FormulaSet{};
  CHECK(cmd_verify(req, out, err) == kUsage);
  req.sweep.formulas = FormulaSet::all();
  req.sweep.max_radius = 50;
  req.sweep.enumeration_cap = 10;
  CHECK(cmd_verify(req, out, err) == kUsage);
}

TEST_CASE("render command") {
  RenderRequest req;
  req.scene = parse_scene("A 0 0 1\nB 1 0 1\nC 9 9 1\n");
  std::ostringstream out, err;
  CHECK(cmd_render(req, out, err) == kUsage);
  req.labels = {"A", "B"};
  CHECK(cmd_render(req, out, err) == kOk);
  CHECK(out.str() == render(parse_scene("A 0 0 1\nB 1 0 1\n")));
  req.labels = {"A", "nope"};
  CHECK(cmd_render(req, out, err) == kUsage);

  req.labels = {"C"};
  req.output_path = "/nonexistent-dir/out.txt";
  CHECK(cmd_render(req, out, err) == kInputError);
}
