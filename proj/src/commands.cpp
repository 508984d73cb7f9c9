#include "ldisc/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "ldisc/set_metrics.hpp"

namespace ldisc::cli {

namespace {

// Hausdorff distance is a full pair scan; refuse beyond this many pairs.
constexpr Coord kMaxHausdorffPairs = Coord{10'000'000'000};

class Table {
 public:
  explicit Table(TableStyle style) : separator_(style == TableStyle::tsv ? "\t" : " | ") {}

  void row(std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) os_ << separator_;
      os_ << c;
      first = false;
    }
    os_ << '\n';
  }

  std::string str() const { return os_.str(); }

 private:
  const char* separator_;
  std::ostringstream os_;
};

void key_value(std::ostream& out, TableStyle style, const std::string& key, const std::string& value) {
  out << key << (style == TableStyle::tsv ? "\t" : ": ") << value << '\n';
}

}  // namespace

int exit_code_for(const SceneError& e) {
  switch (e.kind()) {
    case SceneErrorKind::io: return kInputError;
    case SceneErrorKind::parse: return kParseError;
    case SceneErrorKind::validation: return kValidationError;
  }
  return kInputError;
}

int cmd_card(const CardRequest& request, std::ostream& out, std::ostream& err) {
  if (request.disc_radii.empty() && request.circle_radii.empty()) {
    err << "card: give at least one --disc or --circle radius\n";
    return kUsage;
  }
  Table table(request.style);
  table.row({"kind", "radius", "closed", "enumerated", "status"});
  bool mismatch = false;

  for (Coord r : request.disc_radii) {
    Coord closed = 0;
    try {
      closed = disc_cardinality_closed(r);
    } catch (const DomainError& e) {
      err << "card: " << e.what() << '\n';
      return kUsage;
    }
    std::string enumerated = "skipped";
    std::string status = "skipped";
    try {
      const Coord count = enumerate_disc(DigitalDisc({0, 0}, r), request.enumeration_cap).cardinality();
      enumerated = std::to_string(count);
      status = count == closed ? "ok" : "MISMATCH";
      mismatch = mismatch || count != closed;
    } catch (const CapExceeded&) {
    }
    table.row({"disc", std::to_string(r), std::to_string(closed), enumerated, status});
  }

  for (Coord r : request.circle_radii) {
    if (r < 0 || r > kCoordinateBound) {
      err << "card: circle radius " << r << " is outside [0, 2^30]\n";
      return kUsage;
    }
    std::optional<Coord> closed;
    try {
      closed = circle_cardinality_closed(r);
    } catch (const DomainError&) {
    }
    std::string enumerated = "skipped";
    std::string status = "skipped";
    try {
      const Coord count =
          enumerate_circle(DigitalCircle({0, 0}, r), request.enumeration_cap).cardinality();
      enumerated = std::to_string(count);
      if (!closed) {
        status = "n/a";
      } else {
        status = count == *closed ? "ok" : "MISMATCH";
        mismatch = mismatch || count != *closed;
      }
    } catch (const CapExceeded&) {
    }
    table.row({"circle", std::to_string(r), closed ? std::to_string(*closed) : "domain-error (4r needs r >= 1)",
               enumerated, status});
  }

  out << table.str();
  return mismatch ? kDisagreement : kOk;
}

int cmd_metric(const MetricRequest& request, std::ostream& out, std::ostream& err) {
  const LabeledDisc* a = request.scene.find(request.label_a);
  const LabeledDisc* b = request.scene.find(request.label_b);
  if (a == nullptr || b == nullptr) {
    err << "metric: no disc labelled '" << (a == nullptr ? request.label_a : request.label_b)
        << "' in the scene\n";
    return kUsage;
  }

  const DiscPair pair{a->disc, b->disc};
  std::optional<VerificationReport> verified;
  PixelSet set_a;
  PixelSet set_b;
  try {
    verified = verify_pair(pair, request.enumeration_cap);
    set_a = enumerate_disc(pair.first, request.enumeration_cap);
    set_b = enumerate_disc(pair.second, request.enumeration_cap);
  } catch (const CapExceeded& e) {
    err << "metric: " << e.what() << " (raise it with --enum-cap)\n";
    return kInputError;
  }
  const VerificationReport& report = *verified;

  const TableStyle style = request.style;
  key_value(out, style, a->label, to_string(a->disc));
  key_value(out, style, b->label, to_string(b->disc));
  key_value(out, style, "card(A)", std::to_string(report.card_first));
  key_value(out, style, "card(B)", std::to_string(report.card_second));
  key_value(out, style, "card(A&B)", std::to_string(report.card_intersection));
  key_value(out, style, "m", std::to_string(report.oracle_m));
  if (report.card_first * report.card_second <= kMaxHausdorffPairs) {
    key_value(out, style, "d_H", std::to_string(hausdorff_distance(set_a, set_b).value));
  } else {
    key_value(out, style, "d_H", "skipped (pair scan too large)");
  }
  key_value(out, style, "regime", report.regime.to_string());
  if (report.dims) {
    key_value(out, style, "k,n", std::to_string(report.dims->k) + "," + std::to_string(report.dims->n));
  }
  if (report.checks.empty()) {
    key_value(out, style, "closed forms", "none applicable");
  }
  for (const auto& c : report.checks) {
    std::ostringstream value;
    value << c.closed_m << " (oracle " << report.oracle_m << ") " << (c.agrees ? "ok" : "DISAGREES");
    key_value(out, style, std::string(formula_name(c.formula)), value.str());
  }
  if (report.overlap_is_predicted_disc) {
    key_value(out, style, "thm3 overlap disc",
              to_string(thm3_overlap_disc(pair)) + (*report.overlap_is_predicted_disc ? " ok" : " DISAGREES"));
  }
  return kOk;
}

void write_verify_report(const SweepResult& result, FormulaSet formulas, std::ostream& out) {
  out << "R1\tR2\tgamma\tdelta\tregime\toracle_m\tclosed_m\tformula\n";
  for (const auto& r : result.disagreements) {
    for (const auto& c : r.checks) {
      if (!formulas.has(c.formula) || c.agrees) continue;
      out << r.pair.first.radius() << '\t' << r.pair.second.radius() << '\t'
          << r.pair.second.center().x << '\t' << r.pair.second.center().y << '\t'
          << r.regime.to_string() << '\t' << r.oracle_m << '\t' << c.closed_m << '\t'
          << formula_name(c.formula) << '\n';
    }
  }
}

std::string verify_summary(const SweepResult& result, const SweepOptions& sweep) {
  std::int64_t rows = 0;
  for (const auto& r : result.disagreements) {
    for (const auto& c : r.checks) rows += sweep.formulas.has(c.formula) && !c.agrees;
  }
  std::ostringstream os;
  os << "verify: formulas=" << sweep.formulas.to_string() << " max_radius=" << sweep.max_radius
     << " max_offset=" << sweep.max_offset << " pairs_checked=" << result.pairs_checked
     << " disagreeing_pairs=" << result.disagreements.size() << " disagreements=" << rows;
  return os.str();
}

int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err) {
  if (request.sweep.formulas.empty()) {
    err << "verify: no formulas selected\n";
    return kUsage;
  }
  std::ofstream file;
  if (request.report_path) {
    file.open(*request.report_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "verify: cannot write report to " << request.report_path->string() << '\n';
      return kInputError;
    }
  }

  SweepResult result;
  try {
    result = counterexample_search(request.sweep);
  } catch (const Error& e) {
    err << "verify: " << e.what() << '\n';
    return kUsage;
  }

  if (request.report_path) {
    write_verify_report(result, request.sweep.formulas, file);
    file.close();
    if (!file) {
      err << "verify: failed writing " << request.report_path->string() << '\n';
      return kInputError;
    }
  } else {
    write_verify_report(result, request.sweep.formulas, out);
  }
  out << verify_summary(result, request.sweep) << '\n';
  return result.disagreements.empty() ? kOk : kDisagreement;
}

int cmd_render(const RenderRequest& request, std::ostream& out, std::ostream& err) {
  Scene selected;
  selected.window = request.scene.window;
  if (request.labels.empty()) {
    selected.discs = request.scene.discs;
  } else {
    for (const auto& label : request.labels) {
      const LabeledDisc* d = request.scene.find(label);
      if (d == nullptr) {
        err << "render: no disc labelled '" << label << "' in the scene\n";
        return kUsage;
      }
      selected.discs.push_back(*d);
    }
  }
  if (selected.discs.size() > 2) {
    err << "render: the scene has " << selected.discs.size()
        << " discs; name at most two labels to draw\n";
    return kUsage;
  }

  std::string image;
  try {
    image = render(selected, request.options);
  } catch (const Error& e) {
    err << "render: " << e.what() << '\n';
    return kUsage;
  }

  if (request.output_path) {
    std::ofstream file(*request.output_path, std::ios::binary | std::ios::trunc);
    file << image;
    if (!file) {
      err << "render: cannot write " << request.output_path->string() << '\n';
      return kInputError;
    }
  } else {
    out << image;
  }
  return kOk;
}

}  // namespace ldisc::cli
