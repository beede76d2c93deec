#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "dimertoric/figures.hpp"
#include "dimertoric/fixtures.hpp"
#include "dimertoric/io.hpp"

using namespace dimertoric;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DimerModel load_input(const std::string& input) {
  if (input.rfind("fixture:", 0) == 0) return fixture_model(input.substr(8));
  return parse_dimer(slurp(input));
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw StructuralError("cannot write '" + out + "'");
    f << text;
  }
}

Vec2 parse_point(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw StructuralError("expected a point as 'x,y', got '" + s + "'");
  try {
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw StructuralError("expected a point as 'x,y', got '" + s + "'");
  }
}

struct Options {
  std::string input;
  std::string out;
  int pm = -1;  // -1: smallest central candidate
  std::string origin;
  unsigned seed = 0;
  bool figures = false;
  i64 lift_bound = 1;
  int max_length = 24;
};

std::optional<Vec2> origin_of(const Options& o) {
  if (o.origin.empty()) return std::nullopt;
  return parse_point(o.origin);
}

// Everything downstream of classification, built once.
struct Session {
  Dimer dimer;
  Polygon poly;
  ClassificationReport cls;
  WeightTable wt;
  int d0;
  Collection col;

  explicit Session(const Options& o)
      : dimer(Dimer::compile(load_input(o.input))),
        poly(characteristic_polygon(dimer)),
        cls(classify_matchings(dimer, poly, origin_of(o))),
        wt(dimer),
        d0(o.pm >= 0 ? o.pm : cls.central_candidates.at(0)),
        col(build_collection(wt, poly, cls, d0)) {}
};

int cmd_validate(const Options& o) {
  ValidationReport r = Dimer::validate(load_input(o.input));
  emit(validation_report_json(r), o.out);
  return r.valid ? 0 : 2;
}

int cmd_quiver(const Options& o) {
  Dimer d = Dimer::compile(load_input(o.input));
  emit(quiver_report_json(d), o.out);
  return 0;
}

int cmd_zigzag(const Options& o) {
  Dimer d = Dimer::compile(load_input(o.input));
  emit(zigzag_report_json(d), o.out);
  return d.consistency().pass() ? 0 : 1;
}

int cmd_matchings(const Options& o) {
  Dimer d = Dimer::compile(load_input(o.input));
  emit(matchings_report_json(d), o.out);
  return 0;
}

int cmd_polygon(const Options& o) {
  Dimer d = Dimer::compile(load_input(o.input));
  Polygon poly = characteristic_polygon(d);
  emit(polygon_report_json(poly), o.out);
  return 0;
}

int cmd_collection(const Options& o) {
  Session s(o);
  emit(collection_report_json(s.col), o.out);
  return 0;
}

int cmd_verify(const Options& o) {
  Session s(o);
  VerificationReport r = verify_strong_exceptional(s.col);
  emit(verification_report_json(r), o.out);
  return r.pass ? 0 : 1;
}

int cmd_crosscheck(const Options& o) {
  Session s(o);
  CrossCheckReport r = cross_check_endomorphism_algebra(
      s.wt, s.wt.matchings()[s.d0], s.col);
  emit(crosscheck_report_json(r), o.out);
  return r.equal ? 0 : 1;
}

int cmd_superpotential(const Options& o) {
  Dimer d = Dimer::compile(load_input(o.input));
  WeightTable wt(d);
  emit(superpotential_report_json(wt, o.lift_bound, o.max_length), o.out);
  return 0;
}

int cmd_curved(const Options& o) {
  Dimer d = Dimer::compile(load_input(o.input));
  CurvedDiagram cd = curved_diagram(d);
  emit(curved_report_json(d, cd), o.out);
  return cd.all_checks_pass ? 0 : 1;
}

int cmd_report(const Options& o) {
  using njson = nlohmann::ordered_json;
  int code = 0;
  njson doc;
  DimerModel model = load_input(o.input);
  ValidationReport vr = Dimer::validate(model);
  doc["validation"] = njson::parse(validation_report_json(vr));
  if (!vr.valid) {
    emit(doc.dump(2) + "\n", o.out.empty() ? "" : o.out + "/report.json");
    return 2;
  }
  Dimer d = Dimer::compile(model);
  doc["quiver"] = njson::parse(quiver_report_json(d));
  doc["zigzag"] = njson::parse(zigzag_report_json(d));
  if (!d.consistency().pass()) code = std::max(code, 1);
  doc["matchings"] = njson::parse(matchings_report_json(d));

  Polygon poly;
  const Polygon* polyp = nullptr;
  const Collection* colp = nullptr;
  const VerificationReport* verp = nullptr;
  Collection col;
  VerificationReport ver;
  ClassificationReport cls;
  try {
    poly = characteristic_polygon(d);
    polyp = &poly;
    doc["polygon"] = njson::parse(polygon_report_json(poly));
    cls = classify_matchings(d, poly, origin_of(o));
    doc["classification"] = njson::parse(classification_report_json(poly, cls));
    WeightTable wt(d);
    int d0 = o.pm >= 0 ? o.pm : cls.central_candidates.at(0);
    col = build_collection(wt, poly, cls, d0);
    colp = &col;
    doc["collection"] = njson::parse(collection_report_json(col));
    ver = verify_strong_exceptional(col);
    verp = &ver;
    doc["verification"] = njson::parse(verification_report_json(ver));
    if (!ver.pass) code = std::max(code, 1);
    CrossCheckReport cc =
        cross_check_endomorphism_algebra(wt, wt.matchings()[d0], col);
    doc["crosscheck"] = njson::parse(crosscheck_report_json(cc));
    if (!cc.equal) code = std::max(code, 1);
    doc["superpotential"] = njson::parse(
        superpotential_report_json(wt, o.lift_bound, o.max_length));
    CurvedDiagram cd = curved_diagram(d);
    doc["curved_diagram"] = njson::parse(curved_report_json(d, cd));
    if (!cd.all_checks_pass) code = std::max(code, 1);
  } catch (const StructuralError& e) {
    doc["error"] = e.what();
    code = 2;
  }

  if (o.out.empty()) {
    emit(doc.dump(2) + "\n", "");
  } else {
    fs::create_directories(o.out);
    emit(doc.dump(2) + "\n", o.out + "/report.json");
    if (o.figures) {
      auto figs = render_figures(d, polyp, polyp ? &cls : nullptr, colp, verp,
                                 o.seed);
      for (const auto& [name, svg] : figs) emit(svg, o.out + "/" + name);
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dimer models on the torus: quivers, matchings, polygons, and exact "
      "line-bundle cohomology on the associated toric surface stack"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input,
                    "model file, or fixture:NAME for a bundled example")
        ->required();
    sub->add_option("--out", o.out, "write output here instead of stdout");
  };
  auto add_pm = [&](CLI::App* sub) {
    sub->add_option("--pm", o.pm,
                    "central matching id (default: smallest candidate)");
    sub->add_option("--origin", o.origin,
                    "interior lattice point 'x,y' used as the origin");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a model document");
  add_input(validate);
  CLI::App* quiver =
      app.add_subcommand("quiver", "faces, dual quiver, relation paths");
  add_input(quiver);
  CLI::App* zigzag =
      app.add_subcommand("zigzag", "zig-zag paths and consistency");
  add_input(zigzag);
  CLI::App* matchings =
      app.add_subcommand("matchings", "perfect matchings and classes");
  add_input(matchings);
  CLI::App* polygon =
      app.add_subcommand("polygon", "class polygon with multiplicities");
  add_input(polygon);
  CLI::App* collection = app.add_subcommand(
      "collection", "line-bundle collection for a central matching");
  add_input(collection);
  add_pm(collection);
  CLI::App* verify = app.add_subcommand(
      "verify", "strong exceptionality of the collection (exact cohomology)");
  add_input(verify);
  add_pm(verify);
  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "path-algebra quotient vs lattice-point Hom dimensions");
  add_input(crosscheck);
  add_pm(crosscheck);
  CLI::App* superpotential = app.add_subcommand(
      "superpotential", "small cycles, centrality, truncated dimensions");
  add_input(superpotential);
  superpotential->add_option("--lift-bound", o.lift_bound,
                             "max |lift|_inf counted (default 1)");
  superpotential->add_option("--max-length", o.max_length,
                             "path length cap for the search (default 24)");
  CLI::App* curved = app.add_subcommand(
      "curved-diagram", "curved cyclic quivers for edges and nodes");
  add_input(curved);
  CLI::App* report =
      app.add_subcommand("report", "everything above in one document");
  add_input(report);
  add_pm(report);
  report->add_flag("--figures", o.figures, "also render SVG figures (needs --out)");
  report->add_option("--seed", o.seed, "fallback-layout seed (figures only)");
  report->add_option("--lift-bound", o.lift_bound,
                     "max |lift|_inf counted (default 1)");
  report->add_option("--max-length", o.max_length,
                     "path length cap for the search (default 24)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*validate) return cmd_validate(o);
    if (*quiver) return cmd_quiver(o);
    if (*zigzag) return cmd_zigzag(o);
    if (*matchings) return cmd_matchings(o);
    if (*polygon) return cmd_polygon(o);
    if (*collection) return cmd_collection(o);
    if (*verify) return cmd_verify(o);
    if (*crosscheck) return cmd_crosscheck(o);
    if (*superpotential) return cmd_superpotential(o);
    if (*curved) return cmd_curved(o);
    if (*report) return cmd_report(o);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnboundedRank& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
