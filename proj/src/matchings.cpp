#include "dimertoric/matchings.hpp"

#include <algorithm>
#include <functional>

namespace dimertoric {

std::vector<PerfectMatching> enumerate_matchings(const Dimer& dimer) {
  if (dimer.black_count() * 2 != dimer.node_count())
    throw StructuralError("no perfect matching exists: " +
                          std::to_string(dimer.black_count()) + " black vs " +
                          std::to_string(dimer.node_count() - dimer.black_count()) +
                          " white nodes");
  const int B = dimer.black_count();
  std::vector<char> white_used(dimer.node_count() - B, 0);
  std::vector<int> chosen;
  std::vector<std::vector<int>> found;

  std::function<void(int)> go = [&](int b) {
    if (b == B) {
      found.push_back(chosen);
      return;
    }
    for (int e : dimer.star(b)) {
      int w = dimer.white_end(e) - B;
      if (white_used[w]) continue;
      white_used[w] = 1;
      chosen.push_back(e);
      go(b + 1);
      chosen.pop_back();
      white_used[w] = 0;
    }
  };
  go(0);

  // Deterministic order: lexicographic in the sorted edge-id string lists.
  std::vector<std::pair<std::vector<std::string>, std::vector<int>>> keyed;
  for (auto& edges : found) {
    std::vector<std::pair<std::string, int>> by_id;
    for (int e : edges) by_id.push_back({dimer.edge_id(e), e});
    std::sort(by_id.begin(), by_id.end());
    std::vector<std::string> key;
    std::vector<int> sorted_edges;
    for (auto& [id, e] : by_id) {
      key.push_back(id);
      sorted_edges.push_back(e);
    }
    keyed.push_back({std::move(key), std::move(sorted_edges)});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<PerfectMatching> out;
  for (size_t i = 0; i < keyed.size(); ++i)
    out.push_back({(int)i, std::move(keyed[i].second)});
  return out;
}

Vec2 matching_class(const Dimer& dimer, const PerfectMatching& pm,
                    const PerfectMatching& ref) {
  Vec2 u{0, 0};
  for (int e : ref.edges) u += dimer.shift(e);
  for (int e : pm.edges) u -= dimer.shift(e);
  return rot_minus90(u);
}

Polygon characteristic_polygon(const Dimer& dimer) {
  Polygon poly;
  poly.matchings = enumerate_matchings(dimer);
  if (poly.matchings.empty())
    throw StructuralError("model admits no perfect matching");
  for (const auto& pm : poly.matchings)
    poly.classes.push_back(matching_class(dimer, pm, poly.matchings[0]));
  poly.hull = convex_hull(poly.classes);
  if (poly.hull.size() < 3)
    throw StructuralError("degenerate polygon: all matching classes are collinear");
  poly.twice_area = twice_area(poly.hull);
  for (Vec2 c : poly.classes) poly.multiplicity[c]++;
  std::vector<Vec2> boundary = boundary_lattice_points(poly.hull);
  for (Vec2 p : boundary) poly.role[p] = PointRole::Boundary;
  for (Vec2 p : poly.hull) poly.role[p] = PointRole::Corner;
  for (Vec2 p : interior_lattice_points(poly.hull)) poly.role[p] = PointRole::Interior;
  return poly;
}

ClassificationReport classify_matchings(const Dimer& dimer, const Polygon& poly,
                                        std::optional<Vec2> origin) {
  (void)dimer;
  ClassificationReport rep;
  std::vector<Vec2> interior_occupied;
  for (const auto& [p, role] : poly.role)
    if (role == PointRole::Interior && poly.multiplicity.count(p))
      interior_occupied.push_back(p);

  if (origin) {
    auto it = poly.role.find(*origin);
    if (it == poly.role.end() || it->second != PointRole::Interior)
      throw StructuralError("origin " + to_string(*origin) +
                            " is not an interior lattice point of the polygon");
    if (!poly.multiplicity.count(*origin))
      throw StructuralError("origin " + to_string(*origin) +
                            " is not realized by any perfect matching");
    rep.origin = *origin;
  } else if (interior_occupied.empty()) {
    throw StructuralError(
        "no central candidate: no perfect-matching class is interior to the polygon");
  } else if (interior_occupied.size() > 1) {
    throw StructuralError(
        "several interior lattice points are occupied; pass an explicit origin");
  } else {
    rep.origin = interior_occupied[0];
  }

  for (size_t i = 0; i < poly.matchings.size(); ++i) {
    MatchingLabel lab;
    lab.matching = (int)i;
    lab.cls = poly.classes[i];
    lab.role = poly.role.at(lab.cls);
    rep.labels.push_back(lab);
    if (lab.cls == rep.origin) rep.central_candidates.push_back((int)i);
  }

  for (Vec2 p : boundary_lattice_points(poly.hull)) {
    auto it = poly.multiplicity.find(p);
    int mult = it == poly.multiplicity.end() ? 0 : it->second;
    rep.boundary_multiplicity.push_back({p, mult});
    if (mult == 0)
      throw StructuralError("boundary lattice point " + to_string(p) +
                            " of the polygon is not realized by any matching");
    if (mult > 1)
      rep.warnings.push_back(
          "boundary lattice point " + to_string(p) + " carries " +
          std::to_string(mult) +
          " matchings; the smallest-id one is used as its representative");
  }
  return rep;
}

}  // namespace dimertoric
