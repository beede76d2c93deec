#include <doctest.h>

#include "dimertoric/collections.hpp"
#include "dimertoric/fixtures.hpp"

using namespace dimertoric;

namespace {

struct Pipeline {
  Dimer dimer;
  Polygon poly;
  ClassificationReport cls;
  WeightTable wt;
  Collection coll;

  Pipeline(const std::string& name, int d0)
      : dimer(Dimer::compile(fixture_model(name))),
        poly(characteristic_polygon(dimer)),
        cls(classify_matchings(dimer, poly)),
        wt(dimer),
        coll(build_collection(wt, poly, cls, d0)) {}
};

i64 pair_h0(const VerificationReport& rep, int from, int to) {
  for (const auto& p : rep.pairs)
    if (p.from == from && p.to == to) return p.h0;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("dp0 collection: frozen bundles and verification") {
  Pipeline p("dp0", 1);
  CHECK(p.coll.fan.rays == std::vector<Vec2>{{-2, -1}, {1, 0}, {1, 1}});
  CHECK(p.coll.boundary_matching == std::vector<int>{5, 0, 4});
  CHECK(p.coll.base_vertex == 0);
  REQUIRE(p.coll.bundles.size() == 3);
  CHECK(p.coll.bundles[0].normal_form == std::vector<i64>{0, 0, 0});
  CHECK(p.coll.bundles[1].normal_form == std::vector<i64>{0, 0, 1});
  CHECK(p.coll.bundles[2].normal_form == std::vector<i64>{0, 0, 2});
  CHECK(p.coll.bundles[1].coefficients == std::vector<i64>{1, -1, 1});

  auto ver = verify_strong_exceptional(p.coll);
  CHECK(ver.pass);
  CHECK(ver.reasons.empty());
  CHECK(ver.order == std::vector<int>{0, 1, 2});
  CHECK(ver.end_h0 == std::vector<i64>{1, 1, 1});
  CHECK(pair_h0(ver, 0, 1) == 3);
  CHECK(pair_h0(ver, 0, 2) == 6);
  CHECK(pair_h0(ver, 1, 2) == 3);
  CHECK(pair_h0(ver, 2, 0) == 0);
  for (const auto& pr : ver.pairs) {
    CHECK(pr.h1 == 0);
    CHECK(pr.h2 == 0);
    CHECK(pr.bad_support.empty());
  }
  CHECK(fullness_rank_check(p.coll, p.poly, p.dimer));
}

TEST_CASE("every central candidate of every fixture verifies and cross-checks") {
  for (const auto& name : fixture_names()) {
    if (name == "c3") continue;  // no interior point, no collection
    CAPTURE(name);
    Dimer d = Dimer::compile(fixture_model(name));
    Polygon poly = characteristic_polygon(d);
    auto cls = classify_matchings(d, poly);
    WeightTable wt(d);
    for (int d0 : cls.central_candidates) {
      CAPTURE(d0);
      Collection coll = build_collection(wt, poly, cls, d0);
      auto ver = verify_strong_exceptional(coll);
      CHECK(ver.pass);
      auto xc = cross_check_endomorphism_algebra(wt, wt.matchings()[d0], coll);
      CHECK(xc.equal);
      CHECK_FALSE(xc.first_mismatch.has_value());
      CHECK(fullness_rank_check(coll, poly, d));
      // The central bundle at the base vertex is trivial.
      CHECK(coll.bundles[coll.base_vertex].normal_form ==
            std::vector<i64>(coll.fan.size(), 0));
      // Distinct normal forms across the collection.
      for (size_t i = 0; i < coll.bundles.size(); ++i)
        for (size_t j = i + 1; j < coll.bundles.size(); ++j)
          CHECK(coll.bundles[i].normal_form != coll.bundles[j].normal_form);
    }
  }
}

TEST_CASE("cross-check totals match the path-algebra quotients") {
  struct Row {
    const char* name;
    int d0;
    i64 total;
  };
  for (Row r : std::initializer_list<Row>{{"dp0", 1, 15},
                                          {"dp0", 2, 15},
                                          {"dp0", 3, 15},
                                          {"f0", 0, 24},
                                          {"f1", 0, 20},
                                          {"f1", 3, 28},
                                          {"f1", 5, 24},
                                          {"f1", 6, 24},
                                          {"wf1", 2, 24}}) {
    CAPTURE(r.name);
    CAPTURE(r.d0);
    Pipeline p(r.name, r.d0);
    auto xc = cross_check_endomorphism_algebra(p.wt, p.wt.matchings()[r.d0],
                                               p.coll);
    REQUIRE(xc.equal);
    CHECK(xc.path_side.total == r.total);
    i64 toric_total = 0;
    for (const auto& row : xc.toric_side)
      for (i64 v : row) toric_total += v;
    CHECK(toric_total == r.total);
  }
}

TEST_CASE("a perturbed bundle is caught and the first mismatch is named") {
  Pipeline p("dp0", 1);
  Collection broken = p.coll;
  broken.bundles[2].coefficients[0] += 1;
  broken.bundles[2] =
      divisor_class_normal_form(broken.fan, broken.bundles[2].coefficients);
  auto xc = cross_check_endomorphism_algebra(p.wt, p.wt.matchings()[1], broken);
  CHECK_FALSE(xc.equal);
  REQUIRE(xc.first_mismatch.has_value());
  // Entries are scanned in row order; the first divergent Hom involves the
  // tampered bundle 2.
  auto [i, j] = *xc.first_mismatch;
  CHECK((i == 2 || j == 2));
  CHECK(xc.path_side.dim[i][j] != xc.toric_side[i][j]);
}

TEST_CASE("verification reports failures instead of hiding them") {
  Pipeline p("f0", 0);
  Collection broken = p.coll;
  // Duplicate bundle: exceptionality needs pairwise-distinct classes.
  broken.bundles[1] = broken.bundles[2];
  auto ver = verify_strong_exceptional(broken);
  CHECK_FALSE(ver.pass);
  REQUIRE_FALSE(ver.reasons.empty());
  CHECK(ver.reasons[0] == "bundles 1 and 2 are not distinct classes");
  CHECK(ver.order.empty());  // no order is claimed for a failing collection
}

TEST_CASE("a non-central matching id is rejected when building") {
  Dimer d = Dimer::compile(fixture_model("dp0"));
  Polygon poly = characteristic_polygon(d);
  auto cls = classify_matchings(d, poly);
  WeightTable wt(d);
  // Matching 0 sits at a corner of the polygon, not at the origin.
  CHECK_THROWS_AS(build_collection(wt, poly, cls, 0), StructuralError);
  CHECK_THROWS_AS(build_collection(wt, poly, cls, 99), StructuralError);
  try {
    build_collection(wt, poly, cls, 0);
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("not a central candidate") !=
          std::string::npos);
  }
}

TEST_CASE("wf1 uses the smallest-id representative at the doubled point") {
  Pipeline p("wf1", 2);
  CHECK(p.coll.fan.rays ==
        std::vector<Vec2>{{-2, 1}, {-1, 0}, {0, -1}, {1, 0}});
  CHECK(p.coll.boundary_matching == std::vector<int>{8, 1, 0, 7});
  // Ray 1 points at the boundary class (-1,1) of multiplicity two; the
  // collection must pick the smaller of the two matching ids.
  int rep = p.coll.boundary_matching[1];
  CHECK(p.poly.classes[rep] == p.cls.origin + p.coll.fan.rays[1]);
  int hits = 0;
  for (size_t i = 0; i < p.poly.classes.size(); ++i)
    if (p.poly.classes[i] == p.poly.classes[rep]) {
      ++hits;
      CHECK((int)i >= rep);
    }
  CHECK(hits == 2);
}

TEST_CASE("hom digraph is acyclic with the frozen topological orders") {
  struct Row {
    const char* name;
    int d0;
    std::vector<int> order;
  };
  for (Row r : std::initializer_list<Row>{{"dp0", 1, {0, 1, 2}},
                                          {"f0", 0, {0, 3, 1, 2}},
                                          {"f1", 0, {0, 2, 1, 3}},
                                          {"wf1", 2, {0, 3, 1, 2}}}) {
    CAPTURE(r.name);
    Pipeline p(r.name, r.d0);
    auto ver = verify_strong_exceptional(p.coll);
    REQUIRE(ver.pass);
    CHECK(ver.order == r.order);
    // Nonzero Homs only run forward along the order.
    std::vector<int> pos(ver.order.size());
    for (size_t i = 0; i < ver.order.size(); ++i) pos[ver.order[i]] = (int)i;
    for (const auto& pr : ver.pairs)
      if (pr.h0 > 0) CHECK(pos[pr.from] < pos[pr.to]);
  }
}
