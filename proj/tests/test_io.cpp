#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dimertoric/figures.hpp"
#include "dimertoric/fixtures.hpp"
#include "dimertoric/io.hpp"

using namespace dimertoric;

TEST_CASE("models survive a serialize/parse round trip") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    DimerModel m = fixture_model(name);
    std::string text = serialize_dimer(m);
    DimerModel back = parse_dimer(text);
    CHECK(back == m);
    // Serialization is stable: a second pass is byte-identical.
    CHECK(serialize_dimer(back) == text);
  }
}

TEST_CASE("the bundled documents parse to the embedded models") {
  for (const auto& name : fixture_names())
    CHECK(parse_dimer(fixture_document(name)) == fixture_model(name));
}

TEST_CASE("fixture files on disk match the embedded documents") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    std::ifstream in(std::string(DIMERTORIC_SOURCE_DIR) + "/fixtures/" + name +
                     ".json");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == fixture_document(name) + "\n");
  }
}

TEST_CASE("parse errors carry the offending document path") {
  CHECK_THROWS_WITH_AS(parse_dimer("{"),
                       doctest::Contains("invalid JSON"), StructuralError);
  CHECK_THROWS_WITH_AS(parse_dimer("[1,2]"),
                       "document error at $: expected an object",
                       StructuralError);
  CHECK_THROWS_WITH_AS(parse_dimer(R"({"whites":[]})"),
                       "document error at $: missing key 'blacks'",
                       StructuralError);
  CHECK_THROWS_WITH_AS(
      parse_dimer(R"({"blacks":["b"],"whites":[3]})"),
      "document error at $.whites[0]: expected a string", StructuralError);
  CHECK_THROWS_WITH_AS(
      parse_dimer(
          R"({"blacks":["b"],"whites":["w"],"edges":[{"id":"e"}]})"),
      "document error at $.edges[0]: missing key 'black'", StructuralError);
  CHECK_THROWS_WITH_AS(
      parse_dimer(
          R"({"blacks":["b"],"whites":["w"],
              "edges":[{"id":"e","black":"b","white":"w","shift":[0,"x"]}]})"),
      "document error at $.edges[0].shift[1]: expected an integer",
      StructuralError);
  CHECK_THROWS_WITH_AS(
      parse_dimer(
          R"({"blacks":["b"],"whites":["w"],
              "edges":[{"id":"e","black":"b","white":"w","shift":[0,0,0]}]})"),
      "document error at $.edges[0].shift: expected an array of two integers",
      StructuralError);
  CHECK_THROWS_WITH_AS(
      parse_dimer(
          R"({"blacks":["b"],"whites":["w"],
              "edges":[{"id":"e","black":"b","white":"w","shift":[0,0]}],
              "cyclic_order":{"b":["e"],"w":["e"]},
              "positions":{"den":0,"nodes":{}}})"),
      "document error at $.positions.den: must be positive", StructuralError);
}

TEST_CASE("reports are valid json with the advertised structure") {
  Dimer d = Dimer::compile(fixture_model("dp0"));
  using njson = nlohmann::json;

  auto v = njson::parse(validation_report_json(Dimer::validate(d.model())));
  CHECK(v["valid"] == true);
  CHECK(v["faces"] == 3);

  auto q = njson::parse(quiver_report_json(d));
  CHECK(q["vertices"] == 3);
  CHECK(q["arrows"].size() == 9);
  CHECK(q["faces"].size() == 3);
  for (const auto& a : q["arrows"]) {
    CHECK(a.contains("p_plus"));
    CHECK(a.contains("p_minus"));
    CHECK(a["lift"].size() == 2);
  }

  auto z = njson::parse(zigzag_report_json(d));
  CHECK(z["paths"].size() == 3);
  CHECK(z["class_sum"] == njson::array({0, 0}));
  CHECK(z["consistency"]["pass"] == true);

  auto m = njson::parse(matchings_report_json(d));
  CHECK(m["count"] == 6);
  CHECK(m["matchings"][0]["class"] == njson::array({0, 0}));

  Polygon poly = characteristic_polygon(d);
  auto p = njson::parse(polygon_report_json(poly));
  CHECK(p["twice_area"] == 3);
  CHECK(p["hull"].size() == 3);
  int interior = 0;
  for (const auto& pt : p["points"])
    if (pt["role"] == "interior") {
      ++interior;
      CHECK(pt["multiplicity"] == 3);
    }
  CHECK(interior == 1);

  auto cls = classify_matchings(d, poly);
  auto c = njson::parse(classification_report_json(poly, cls));
  CHECK(c["origin"] == njson::array({-1, 0}));
  CHECK(c["central_candidates"] == njson::array({1, 2, 3}));

  WeightTable wt(d);
  Collection coll = build_collection(wt, poly, cls, 1);
  auto col = njson::parse(collection_report_json(coll));
  CHECK(col["central_matching"] == 1);
  CHECK(col["bundles"].size() == 3);
  CHECK(col["bundles"][2]["normal_form"] == njson::array({0, 0, 2}));

  auto ver = njson::parse(
      verification_report_json(verify_strong_exceptional(coll)));
  CHECK(ver["pass"] == true);
  CHECK(ver["order"] == njson::array({0, 1, 2}));
  CHECK(ver["pairs"].size() == 6);

  auto xc = njson::parse(crosscheck_report_json(
      cross_check_endomorphism_algebra(wt, wt.matchings()[1], coll)));
  CHECK(xc["equal"] == true);
  CHECK(xc["first_mismatch"].is_null());
  CHECK(xc["path_side"] == xc["toric_side"]);

  auto sp = njson::parse(superpotential_report_json(wt, 1));
  CHECK(sp["unit_weight"] == true);
  CHECK(sp["centrality"]["pass"] == true);
  CHECK(sp["truncated_dims"]["entries"].size() == 9);
  for (const auto& e : sp["truncated_dims"]["entries"]) {
    CHECK(e["count"] == 9);
    CHECK(e["stabilized"] == true);
  }

  auto cd = njson::parse(curved_report_json(d, curved_diagram(d)));
  CHECK(cd["pass"] == true);
  CHECK(cd["edge_objects"].size() == 9);
  CHECK(cd["node_objects"].size() == 6);
  CHECK(cd["morphisms"].size() == 18);
}

TEST_CASE("report builders are deterministic") {
  Dimer d = Dimer::compile(fixture_model("f1"));
  CHECK(quiver_report_json(d) == quiver_report_json(d));
  CHECK(zigzag_report_json(d) == zigzag_report_json(d));
  Polygon poly = characteristic_polygon(d);
  CHECK(polygon_report_json(poly) == polygon_report_json(poly));
}

TEST_CASE("figures render deterministically") {
  Dimer d = Dimer::compile(fixture_model("dp0"));
  Polygon poly = characteristic_polygon(d);
  auto cls = classify_matchings(d, poly);
  WeightTable wt(d);
  Collection coll = build_collection(wt, poly, cls, 1);
  auto ver = verify_strong_exceptional(coll);

  auto f1 = render_figures(d, &poly, &cls, &coll, &ver, 0);
  auto f2 = render_figures(d, &poly, &cls, &coll, &ver, 0);
  CHECK(f1 == f2);
  CHECK(f1.count("dimer.svg") == 1);
  CHECK(f1.count("quiver.svg") == 1);
  CHECK(f1.count("polygon.svg") == 1);
  CHECK(f1.count("hom.svg") == 1);
  for (const auto& [name, body] : f1) {
    CAPTURE(name);
    CHECK(body.substr(0, 4) == "<svg");
    CHECK(body.find("</svg>") != std::string::npos);
  }
  // Positioned models ignore the seed entirely.
  CHECK(render_figures(d, &poly, &cls, &coll, &ver, 1234) == f1);
}

TEST_CASE("seed only moves the fallback layout") {
  // f1 ships without positions, so the quiver drawing uses the seeded grid.
  Dimer d = Dimer::compile(fixture_model("f1"));
  auto a = render_figures(d, nullptr, nullptr, nullptr, nullptr, 1);
  auto b = render_figures(d, nullptr, nullptr, nullptr, nullptr, 2);
  auto a2 = render_figures(d, nullptr, nullptr, nullptr, nullptr, 1);
  CHECK(a == a2);
  CHECK(a.at("quiver.svg") != b.at("quiver.svg"));
  // Figure sections that do not involve node layout are seed-independent.
  CHECK(a.count("polygon.svg") == 0);  // no polygon handed in
}

TEST_CASE("partial figure input yields partial output") {
  Dimer d = Dimer::compile(fixture_model("f0"));
  Polygon poly = characteristic_polygon(d);
  auto figs = render_figures(d, &poly, nullptr, nullptr, nullptr, 0);
  CHECK(figs.count("dimer.svg") == 1);
  CHECK(figs.count("quiver.svg") == 1);
  CHECK(figs.count("polygon.svg") == 1);
  CHECK(figs.count("hom.svg") == 0);
}
