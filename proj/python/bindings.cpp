// Python bindings.  Every operation takes a model document (JSON text) and
// returns a report as JSON text; the package wrapper parses those into
// dicts.  Structural problems in the input map to ValueError, genuinely
// infinite ranks to RuntimeError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>

#include "dimertoric/figures.hpp"
#include "dimertoric/fixtures.hpp"
#include "dimertoric/io.hpp"

namespace py = pybind11;
using namespace dimertoric;

namespace {

using OriginArg = std::optional<std::pair<i64, i64>>;

std::optional<Vec2> to_vec(const OriginArg& origin) {
  if (!origin) return std::nullopt;
  return Vec2{origin->first, origin->second};
}

// Everything downstream of classification, built once.
struct Session {
  Dimer dimer;
  Polygon poly;
  ClassificationReport cls;
  WeightTable wt;
  int d0;
  Collection col;

  Session(const std::string& doc, int pm, const OriginArg& origin)
      : dimer(Dimer::compile(parse_dimer(doc))),
        poly(characteristic_polygon(dimer)),
        cls(classify_matchings(dimer, poly, to_vec(origin))),
        wt(dimer),
        d0(pm >= 0 ? pm : cls.central_candidates.at(0)),
        col(build_collection(wt, poly, cls, d0)) {}
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "dimer models on the torus: quivers, matchings, polygons, and exact "
      "line-bundle cohomology on the associated toric surface stack";
  m.attr("__version__") = "0.1.0";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const StructuralError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const UnboundedRank& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def("fixture_names", &fixture_names,
        "Names of the bundled example models.");
  m.def(
      "fixture", [](const std::string& name) { return fixture_document(name); },
      py::arg("name"), "Model document of a bundled example.");
  m.def(
      "canonical_document",
      [](const std::string& doc) { return serialize_dimer(parse_dimer(doc)); },
      py::arg("document"),
      "Parse and re-serialize a model document in canonical key order.");

  m.def(
      "validate",
      [](const std::string& doc) {
        return validation_report_json(Dimer::validate(parse_dimer(doc)));
      },
      py::arg("document"), "Structural validation report.");
  m.def(
      "quiver",
      [](const std::string& doc) {
        return quiver_report_json(Dimer::compile(parse_dimer(doc)));
      },
      py::arg("document"), "Faces, dual quiver, and relation paths.");
  m.def(
      "zigzag",
      [](const std::string& doc) {
        return zigzag_report_json(Dimer::compile(parse_dimer(doc)));
      },
      py::arg("document"), "Zig-zag paths and the consistency checks.");
  m.def(
      "matchings",
      [](const std::string& doc) {
        return matchings_report_json(Dimer::compile(parse_dimer(doc)));
      },
      py::arg("document"), "Perfect matchings and their classes.");
  m.def(
      "polygon",
      [](const std::string& doc) {
        Dimer d = Dimer::compile(parse_dimer(doc));
        return polygon_report_json(characteristic_polygon(d));
      },
      py::arg("document"), "Class polygon with multiplicities.");
  m.def(
      "classification",
      [](const std::string& doc, const OriginArg& origin) {
        Dimer d = Dimer::compile(parse_dimer(doc));
        Polygon poly = characteristic_polygon(d);
        ClassificationReport cls = classify_matchings(d, poly, to_vec(origin));
        return classification_report_json(poly, cls);
      },
      py::arg("document"), py::arg("origin") = std::nullopt,
      "Interior/boundary/corner labels and central candidates.");
  m.def(
      "collection",
      [](const std::string& doc, int pm, const OriginArg& origin) {
        return collection_report_json(Session(doc, pm, origin).col);
      },
      py::arg("document"), py::arg("pm") = -1, py::arg("origin") = std::nullopt,
      "Line-bundle collection for a central matching.");
  m.def(
      "verify",
      [](const std::string& doc, int pm, const OriginArg& origin) {
        Session s(doc, pm, origin);
        return verification_report_json(verify_strong_exceptional(s.col));
      },
      py::arg("document"), py::arg("pm") = -1, py::arg("origin") = std::nullopt,
      "Strong exceptionality of the collection, by exact cohomology.");
  m.def(
      "crosscheck",
      [](const std::string& doc, int pm, const OriginArg& origin) {
        Session s(doc, pm, origin);
        return crosscheck_report_json(cross_check_endomorphism_algebra(
            s.wt, s.wt.matchings()[s.d0], s.col));
      },
      py::arg("document"), py::arg("pm") = -1, py::arg("origin") = std::nullopt,
      "Path-algebra quotient dimensions vs lattice-point Hom dimensions.");
  m.def(
      "superpotential",
      [](const std::string& doc, i64 lift_bound, int max_length) {
        Dimer d = Dimer::compile(parse_dimer(doc));
        WeightTable wt(d);
        return superpotential_report_json(wt, lift_bound, max_length);
      },
      py::arg("document"), py::arg("lift_bound") = 1,
      py::arg("max_length") = 24,
      "Small cycles, centrality, and truncated quotient dimensions.");
  m.def(
      "curved_diagram",
      [](const std::string& doc) {
        Dimer d = Dimer::compile(parse_dimer(doc));
        return curved_report_json(d, curved_diagram(d));
      },
      py::arg("document"), "Curved cyclic quivers for edges and nodes.");
  m.def(
      "figures",
      [](const std::string& doc, int pm, const OriginArg& origin,
         unsigned seed) {
        Dimer d = Dimer::compile(parse_dimer(doc));
        Polygon poly;
        ClassificationReport cls;
        Collection col;
        VerificationReport ver;
        const Polygon* pp = nullptr;
        const ClassificationReport* pc = nullptr;
        const Collection* pl = nullptr;
        const VerificationReport* pv = nullptr;
        try {
          poly = characteristic_polygon(d);
          pp = &poly;
          cls = classify_matchings(d, poly, to_vec(origin));
          pc = &cls;
          WeightTable wt(d);
          int d0 = pm >= 0 ? pm : cls.central_candidates.at(0);
          col = build_collection(wt, poly, cls, d0);
          pl = &col;
          ver = verify_strong_exceptional(col);
          pv = &ver;
        } catch (const StructuralError&) {
          // Render whatever stages succeeded.
        }
        return render_figures(d, pp, pc, pl, pv, seed);
      },
      py::arg("document"), py::arg("pm") = -1, py::arg("origin") = std::nullopt,
      py::arg("seed") = 0,
      "SVG figures as a dict; stages that do not apply are omitted.");
}
