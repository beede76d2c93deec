#include "dimertoric/io.hpp"

#include <json.hpp>

namespace dimertoric {

using njson = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw StructuralError("document error at " + where + ": " + what);
}

const njson& member(const njson& obj, const std::string& key,
                    const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, "missing key '" + key + "'");
  return *it;
}

std::string as_string(const njson& v, const std::string& where) {
  if (!v.is_string()) bad(where, "expected a string");
  return v.get<std::string>();
}

i64 as_int(const njson& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "expected an integer");
  return v.get<i64>();
}

Vec2 as_vec2(const njson& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2)
    bad(where, "expected an array of two integers");
  return {as_int(v[0], where + "[0]"), as_int(v[1], where + "[1]")};
}

std::vector<std::string> as_string_list(const njson& v,
                                        const std::string& where) {
  if (!v.is_array()) bad(where, "expected an array of strings");
  std::vector<std::string> out;
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(as_string(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

njson vec2_json(Vec2 v) { return njson::array({v.x, v.y}); }
njson vec3_json(Vec3 v) { return njson::array({v.x, v.y, v.z}); }

njson edge_id_list(const Dimer& d, const std::vector<int>& edges) {
  njson out = njson::array();
  for (int e : edges) out.push_back(d.edge_id(e));
  return out;
}

std::string role_name(PointRole r) {
  switch (r) {
    case PointRole::Corner: return "corner";
    case PointRole::Boundary: return "boundary";
    default: return "interior";
  }
}

std::string finish(const njson& j) { return j.dump(2) + "\n"; }

}  // namespace

DimerModel parse_dimer(const std::string& text) {
  njson doc;
  try {
    doc = njson::parse(text);
  } catch (const njson::parse_error& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("$", "expected an object");

  DimerModel m;
  m.blacks = as_string_list(member(doc, "blacks", "$"), "$.blacks");
  m.whites = as_string_list(member(doc, "whites", "$"), "$.whites");

  const njson& edges = member(doc, "edges", "$");
  if (!edges.is_array()) bad("$.edges", "expected an array");
  for (size_t i = 0; i < edges.size(); ++i) {
    std::string where = "$.edges[" + std::to_string(i) + "]";
    const njson& e = edges[i];
    RawEdge re;
    re.id = as_string(member(e, "id", where), where + ".id");
    re.black = as_string(member(e, "black", where), where + ".black");
    re.white = as_string(member(e, "white", where), where + ".white");
    re.shift = as_vec2(member(e, "shift", where), where + ".shift");
    m.edges.push_back(std::move(re));
  }

  const njson& cyc = member(doc, "cyclic_order", "$");
  if (!cyc.is_object()) bad("$.cyclic_order", "expected an object");
  for (auto it = cyc.begin(); it != cyc.end(); ++it)
    m.cyclic_order[it.key()] =
        as_string_list(it.value(), "$.cyclic_order." + it.key());

  if (doc.contains("positions")) {
    const njson& pos = doc["positions"];
    m.position_den = as_int(member(pos, "den", "$.positions"),
                            "$.positions.den");
    if (m.position_den < 1) bad("$.positions.den", "must be positive");
    const njson& nodes = member(pos, "nodes", "$.positions");
    if (!nodes.is_object()) bad("$.positions.nodes", "expected an object");
    for (auto it = nodes.begin(); it != nodes.end(); ++it)
      m.position_num[it.key()] =
          as_vec2(it.value(), "$.positions.nodes." + it.key());
  }
  return m;
}

std::string serialize_dimer(const DimerModel& m) {
  njson doc;
  doc["blacks"] = m.blacks;
  doc["whites"] = m.whites;
  doc["edges"] = njson::array();
  for (const RawEdge& e : m.edges)
    doc["edges"].push_back({{"id", e.id},
                            {"black", e.black},
                            {"white", e.white},
                            {"shift", vec2_json(e.shift)}});
  doc["cyclic_order"] = njson::object();
  for (const auto& [node, order] : m.cyclic_order)
    doc["cyclic_order"][node] = order;
  if (!m.position_num.empty()) {
    njson nodes = njson::object();
    for (const auto& [node, p] : m.position_num) nodes[node] = vec2_json(p);
    doc["positions"] = {{"den", m.position_den}, {"nodes", nodes}};
  }
  return finish(doc);
}

std::string validation_report_json(const ValidationReport& r) {
  njson doc;
  doc["valid"] = r.valid;
  doc["faces"] = r.faces;
  doc["errors"] = r.errors;
  doc["warnings"] = r.warnings;
  return finish(doc);
}

std::string quiver_report_json(const Dimer& d) {
  const Quiver& q = d.quiver();
  njson doc;
  doc["vertices"] = q.vertex_count;
  doc["faces"] = njson::array();
  for (const Face& f : d.faces()) {
    njson boundary = njson::array();
    for (int dart : f.darts)
      boundary.push_back({{"node", d.node_name(d.dart_tail(dart))},
                          {"edge", d.edge_id(edge_of_dart(dart))}});
    doc["faces"].push_back({{"id", f.id}, {"boundary", boundary}});
  }
  doc["arrows"] = njson::array();
  for (const Arrow& a : q.arrows)
    doc["arrows"].push_back({{"edge", d.edge_id(a.id)},
                             {"source", a.source},
                             {"target", a.target},
                             {"lift", vec2_json(a.lift)},
                             {"p_plus", edge_id_list(d, q.p_plus[a.id])},
                             {"p_minus", edge_id_list(d, q.p_minus[a.id])}});
  doc["vertex_lift"] = njson::array();
  for (Vec2 v : q.vertex_lift) doc["vertex_lift"].push_back(vec2_json(v));
  return finish(doc);
}

std::string zigzag_report_json(const Dimer& d) {
  njson doc;
  doc["paths"] = njson::array();
  Vec2 sum{0, 0};
  for (const ZigzagPath& z : d.zigzags()) {
    njson steps = njson::array();
    for (int dart : z.darts)
      steps.push_back({{"edge", d.edge_id(edge_of_dart(dart))},
                       {"direction", dir_of_dart(dart) == BW ? "bw" : "wb"}});
    doc["paths"].push_back(
        {{"id", z.id}, {"class", vec2_json(z.homology)}, {"steps", steps}});
    sum = sum + z.homology;
  }
  doc["class_sum"] = vec2_json(sum);
  ConsistencyReport c = d.consistency();
  doc["consistency"] = {{"pass", c.pass()},
                        {"trivial_class_free", c.trivial_class_free},
                        {"no_self_crossing", c.no_self_crossing},
                        {"no_parallel_share", c.no_parallel_share},
                        {"failures", c.failures}};
  return finish(doc);
}

std::string matchings_report_json(const Dimer& d) {
  std::vector<PerfectMatching> pms = enumerate_matchings(d);
  njson doc;
  doc["count"] = (i64)pms.size();
  doc["matchings"] = njson::array();
  for (const PerfectMatching& pm : pms)
    doc["matchings"].push_back(
        {{"id", pm.id},
         {"edges", edge_id_list(d, pm.edges)},
         {"class", vec2_json(matching_class(d, pm, pms[0]))}});
  return finish(doc);
}

std::string polygon_report_json(const Polygon& p) {
  njson doc;
  doc["twice_area"] = p.twice_area;
  doc["hull"] = njson::array();
  for (Vec2 v : p.hull) doc["hull"].push_back(vec2_json(v));
  doc["points"] = njson::array();
  for (const auto& [pt, role] : p.role) {
    auto it = p.multiplicity.find(pt);
    doc["points"].push_back(
        {{"point", vec2_json(pt)},
         {"role", role_name(role)},
         {"multiplicity", it == p.multiplicity.end() ? 0 : it->second}});
  }
  doc["matchings"] = njson::array();
  for (size_t i = 0; i < p.matchings.size(); ++i)
    doc["matchings"].push_back(
        {{"id", (i64)i}, {"class", vec2_json(p.classes[i])}});
  return finish(doc);
}

std::string classification_report_json(const Polygon& p,
                                       const ClassificationReport& c) {
  (void)p;
  njson doc;
  doc["origin"] = vec2_json(c.origin);
  doc["central_candidates"] = c.central_candidates;
  doc["labels"] = njson::array();
  for (const MatchingLabel& l : c.labels)
    doc["labels"].push_back({{"matching", l.matching},
                             {"class", vec2_json(l.cls)},
                             {"role", role_name(l.role)}});
  doc["boundary_multiplicity"] = njson::array();
  for (const auto& [pt, count] : c.boundary_multiplicity)
    doc["boundary_multiplicity"].push_back(
        {{"point", vec2_json(pt)}, {"count", count}});
  doc["warnings"] = c.warnings;
  return finish(doc);
}

std::string collection_report_json(const Collection& col) {
  njson doc;
  doc["fan"] = njson::array();
  for (Vec2 v : col.fan.rays) doc["fan"].push_back(vec2_json(v));
  doc["origin"] = vec2_json(col.origin);
  doc["central_matching"] = col.d0;
  doc["base_vertex"] = col.base_vertex;
  doc["boundary_matching"] = col.boundary_matching;
  doc["bundles"] = njson::array();
  for (size_t v = 0; v < col.bundles.size(); ++v)
    doc["bundles"].push_back({{"vertex", (i64)v},
                              {"coefficients", col.bundles[v].coefficients},
                              {"normal_form", col.bundles[v].normal_form}});
  return finish(doc);
}

std::string verification_report_json(const VerificationReport& r) {
  njson doc;
  doc["pass"] = r.pass;
  doc["order"] = r.order;
  doc["end_h0"] = r.end_h0;
  doc["pairs"] = njson::array();
  for (const PairCohomology& p : r.pairs) {
    njson bad_support = njson::array();
    for (Vec3 m : p.bad_support) bad_support.push_back(vec3_json(m));
    doc["pairs"].push_back({{"from", p.from},
                            {"to", p.to},
                            {"h0", p.h0},
                            {"h1", p.h1},
                            {"h2", p.h2},
                            {"bad_support", bad_support}});
  }
  doc["reasons"] = r.reasons;
  return finish(doc);
}

std::string crosscheck_report_json(const CrossCheckReport& r) {
  njson doc;
  doc["equal"] = r.equal;
  doc["path_side"] = r.path_side.dim;
  doc["toric_side"] = r.toric_side;
  if (r.first_mismatch)
    doc["first_mismatch"] = {{"from", r.first_mismatch->first},
                             {"to", r.first_mismatch->second}};
  else
    doc["first_mismatch"] = nullptr;
  return finish(doc);
}

std::string superpotential_report_json(const WeightTable& wt, i64 lift_bound,
                                       int max_length, int window) {
  const Dimer& d = wt.dimer();
  const Quiver& q = d.quiver();
  njson doc;
  doc["small_cycles"] = njson::array();
  bool unit_weight = true;
  for (int v = 0; v < q.vertex_count; ++v) {
    SmallCycle sc = small_cycle(wt, v);
    Path rep = small_cycle_path(wt, v);
    for (size_t pm = 0; pm < wt.matchings().size(); ++pm)
      if (wt.class_weight(sc.cls, (int)pm) != 1) unit_weight = false;
    doc["small_cycles"].push_back(
        {{"vertex", v},
         {"path", edge_id_list(d, rep.arrows)},
         {"lift", vec2_json(sc.cls.lift)},
         {"ref_weight", sc.cls.ref_weight}});
  }
  doc["unit_weight"] = unit_weight;
  CentralityReport cr = superpotential_centrality(wt);
  doc["centrality"] = {{"pass", cr.pass}, {"witnesses", cr.witnesses}};
  njson entries = njson::array();
  for (int v = 0; v < q.vertex_count; ++v)
    for (int w = 0; w < q.vertex_count; ++w) {
      TruncatedDim td =
          a0_dim_truncated(wt, v, w, lift_bound, max_length, window);
      entries.push_back({{"source", v},
                         {"target", w},
                         {"count", td.count},
                         {"stabilized", td.stabilized},
                         {"depth", td.depth}});
    }
  doc["truncated_dims"] = {{"lift_bound", lift_bound},
                           {"max_length", max_length},
                           {"window", window},
                           {"entries", entries}};
  return finish(doc);
}

std::string curved_report_json(const Dimer& d, const CurvedDiagram& diagram) {
  njson doc;
  doc["edge_objects"] = njson::array();
  for (int e : diagram.edge_objects) doc["edge_objects"].push_back(d.edge_id(e));
  doc["node_objects"] = njson::array();
  for (const CurvedNodeObject& n : diagram.node_objects)
    doc["node_objects"].push_back(
        {{"node", n.node}, {"cycle", edge_id_list(d, n.edges)}});
  doc["morphisms"] = njson::array();
  for (const CurvedMorphism& m : diagram.morphisms)
    doc["morphisms"].push_back(
        {{"edge", d.edge_id(m.edge)},
         {"node", m.node},
         {"position", m.position},
         {"p_image", edge_id_list(d, m.p_image)},
         {"composes", m.composes},
         {"curvature_matches", m.curvature_matches}});
  doc["pass"] = diagram.all_checks_pass;
  return finish(doc);
}

}  // namespace dimertoric
