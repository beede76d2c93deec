#include "dimertoric/collections.hpp"

#include <algorithm>

namespace dimertoric {

Collection build_collection(const WeightTable& wt, const Polygon& poly,
                            const ClassificationReport& cls, int d0) {
  if (d0 < 0 || d0 >= (int)poly.matchings.size())
    throw StructuralError("unknown matching id " + std::to_string(d0));
  if (poly.classes[d0] != cls.origin)
    throw StructuralError(
        "matching " + std::to_string(d0) + " has class " +
        to_string(poly.classes[d0]) + ", not the interior origin " +
        to_string(cls.origin) + "; it is not a central candidate");

  Collection coll;
  coll.origin = cls.origin;
  coll.d0 = d0;
  coll.fan = fan_from_polygon(poly.hull, cls.origin);

  for (Vec2 ray : coll.fan.rays) {
    Vec2 point = ray + cls.origin;
    int rep = -1;
    for (size_t i = 0; i < poly.classes.size(); ++i)
      if (poly.classes[i] == point) {
        rep = (int)i;
        break;  // matching ids are already in canonical order
      }
    if (rep < 0)
      throw StructuralError("boundary lattice point " + to_string(point) +
                            " has no matching");
    coll.boundary_matching.push_back(rep);
  }

  const int F = wt.dimer().quiver().vertex_count;
  for (int v = 0; v < F; ++v) {
    std::vector<i64> a;
    for (int ray = 0; ray < coll.fan.size(); ++ray) {
      int di = coll.boundary_matching[ray];
      a.push_back(wt.tree_offset(v, di) - wt.tree_offset(v, d0));
    }
    coll.bundles.push_back(divisor_class_normal_form(coll.fan, std::move(a)));
  }
  return coll;
}

VerificationReport verify_strong_exceptional(const Collection& coll) {
  VerificationReport rep;
  const int n = (int)coll.bundles.size();

  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (coll.bundles[v].normal_form == coll.bundles[w].normal_form) {
        rep.pass = false;
        rep.reasons.push_back("bundles " + std::to_string(v) + " and " +
                              std::to_string(w) + " are not distinct classes");
      }

  for (int v = 0; v < n; ++v) {
    std::vector<i64> zero(coll.fan.size(), 0);
    CohomologyTable t = cohomology_surface(coll.fan, zero);
    rep.end_h0.push_back(t.h0);
    if (t.h0 != 1 || t.h1 != 0 || t.h2 != 0) {
      rep.pass = false;
      rep.reasons.push_back("endomorphisms of bundle " + std::to_string(v) +
                            " are not scalars only");
    }
  }

  std::vector<std::vector<i64>> hom(n, std::vector<i64>(n, 0));
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (v == w) continue;
      std::vector<i64> diff(coll.fan.size());
      for (int i = 0; i < coll.fan.size(); ++i)
        diff[i] = coll.bundles[w].coefficients[i] - coll.bundles[v].coefficients[i];
      CohomologyTable t = cohomology_surface(coll.fan, diff);
      PairCohomology pc;
      pc.from = v;
      pc.to = w;
      pc.h0 = t.h0;
      pc.h1 = t.h1;
      pc.h2 = t.h2;
      hom[v][w] = t.h0;
      if (t.h1 != 0 || t.h2 != 0) {
        rep.pass = false;
        for (const auto& [m, r] : t.h1_support) {
          (void)r;
          pc.bad_support.push_back(m);
        }
        for (const auto& [m, r] : t.h2_support) {
          (void)r;
          pc.bad_support.push_back(m);
        }
        rep.reasons.push_back("higher cohomology between bundles " +
                              std::to_string(v) + " and " + std::to_string(w));
      }
      rep.pairs.push_back(std::move(pc));
    }
  }

  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (hom[v][w] > 0 && hom[w][v] > 0) {
        rep.pass = false;
        rep.reasons.push_back("morphisms run both ways between bundles " +
                              std::to_string(v) + " and " + std::to_string(w));
      }

  // Topological order of the Hom digraph; deterministic tie-break by
  // lexicographic normal form (then vertex id).
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (v != w && hom[v][w] > 0) ++indeg[w];
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v] || indeg[v] != 0) continue;
      if (best < 0 ||
          coll.bundles[v].normal_form < coll.bundles[best].normal_form)
        best = v;
    }
    if (best < 0) {
      rep.pass = false;
      rep.reasons.push_back("the morphism digraph has a directed cycle");
      break;
    }
    placed[best] = 1;
    rep.order.push_back(best);
    for (int w = 0; w < n; ++w)
      if (w != best && hom[best][w] > 0) --indeg[w];
  }
  if (!rep.pass) rep.order.clear();
  return rep;
}

CrossCheckReport cross_check_endomorphism_algebra(const WeightTable& wt,
                                                  const PerfectMatching& d0,
                                                  const Collection& coll) {
  CrossCheckReport rep;
  rep.path_side = quotient_hom_dims(wt, d0);
  const int n = (int)coll.bundles.size();
  rep.toric_side.assign(n, std::vector<i64>(n, 0));
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      std::vector<i64> diff(coll.fan.size());
      for (int i = 0; i < coll.fan.size(); ++i)
        diff[i] = coll.bundles[w].coefficients[i] - coll.bundles[v].coefficients[i];
      rep.toric_side[v][w] = cohomology_surface(coll.fan, diff).h0;
    }
  }
  for (int v = 0; v < n && rep.equal; ++v)
    for (int w = 0; w < n && rep.equal; ++w)
      if (rep.path_side.dim[v][w] != rep.toric_side[v][w]) {
        rep.equal = false;
        rep.first_mismatch = {v, w};
      }
  return rep;
}

bool fullness_rank_check(const Collection& coll, const Polygon& poly,
                         const Dimer& dimer) {
  i64 bundles = (i64)coll.bundles.size();
  i64 faces = (i64)dimer.faces().size();
  return bundles == faces && faces == poly.twice_area;
}

}  // namespace dimertoric
