#include "dimertoric/superpotential.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dimertoric {

namespace {

PathClass cycle_class_via(const WeightTable& wt, int arrow) {
  const Quiver& q = wt.dimer().quiver();
  Path p;
  p.source = q.arrows[arrow].source;
  p.arrows.push_back(arrow);
  for (int a : q.p_plus[arrow]) p.arrows.push_back(a);
  return wt.path_class(p);
}

}  // namespace

Path small_cycle_path(const WeightTable& wt, int vertex) {
  const Quiver& q = wt.dimer().quiver();
  for (const Arrow& a : q.arrows) {
    if (a.source != vertex) continue;
    Path p;
    p.source = vertex;
    p.arrows.push_back(a.id);
    for (int x : q.p_plus[a.id]) p.arrows.push_back(x);
    return p;
  }
  throw StructuralError("vertex " + std::to_string(vertex) +
                        " has no outgoing arrow");
}

SmallCycle small_cycle(const WeightTable& wt, int vertex) {
  const Quiver& q = wt.dimer().quiver();
  SmallCycle sc;
  sc.vertex = vertex;
  bool first = true;
  for (const Arrow& a : q.arrows) {
    if (a.source != vertex) continue;
    PathClass cls = cycle_class_via(wt, a.id);
    if (first) {
      sc.cls = cls;
      first = false;
    } else if (cls != sc.cls) {
      throw StructuralError(
          "small cycle at vertex " + std::to_string(vertex) +
          " depends on the chosen arrow; the model is inconsistent");
    }
  }
  if (first)
    throw StructuralError("vertex " + std::to_string(vertex) +
                          " has no outgoing arrow");
  return sc;
}

CentralityReport superpotential_centrality(const WeightTable& wt) {
  const Quiver& q = wt.dimer().quiver();
  CentralityReport rep;
  std::vector<SmallCycle> omega;
  for (int v = 0; v < q.vertex_count; ++v) omega.push_back(small_cycle(wt, v));
  for (const Arrow& a : q.arrows) {
    // a then the small cycle at t(a):
    PathClass left = wt.path_class(Path{a.source, {a.id}});
    PathClass after = omega[a.target].cls;
    PathClass lhs{a.source, after.target, left.lift + after.lift,
                  left.ref_weight + after.ref_weight};
    // the small cycle at s(a) then a:
    PathClass before = omega[a.source].cls;
    PathClass rhs{a.source, a.target, before.lift + left.lift,
                  before.ref_weight + left.ref_weight};
    if (lhs != rhs) {
      rep.pass = false;
      rep.witnesses.push_back("arrow '" + wt.dimer().edge_id(a.id) +
                              "' does not commute with the small cycles");
    }
  }
  return rep;
}

bool omega_divisible(const WeightTable& wt, const PathClass& cls) {
  for (size_t pm = 0; pm < wt.matchings().size(); ++pm)
    if (wt.class_weight(cls, (int)pm) < 1) return false;
  return true;
}

TruncatedDim a0_dim_truncated(const WeightTable& wt, int source, int target,
                              i64 lift_bound, int max_length, int window) {
  const Quiver& q = wt.dimer().quiver();
  TruncatedDim out;
  std::set<PathClass> seen;
  std::set<PathClass> counted;
  PathClass unit;
  unit.source = unit.target = source;
  std::deque<PathClass> frontier{unit};
  seen.insert(unit);
  int stale = 0;
  for (int len = 0; !frontier.empty() && len <= max_length; ++len) {
    bool found_new = false;
    for (const PathClass& cls : frontier) {
      if (cls.target == target && !omega_divisible(wt, cls) &&
          std::abs(cls.lift.x) <= lift_bound && std::abs(cls.lift.y) <= lift_bound)
        if (counted.insert(cls).second) found_new = true;
    }
    out.depth = len;
    stale = found_new ? 0 : stale + 1;
    if (stale >= window) {
      out.stabilized = true;
      break;
    }
    std::deque<PathClass> next;
    for (const PathClass& cls : frontier) {
      if (omega_divisible(wt, cls)) continue;  // weights only grow
      for (const Arrow& a : q.arrows) {
        if (a.source != cls.target) continue;
        PathClass ext = wt.extend(cls, a.id);
        if (seen.insert(ext).second) next.push_back(ext);
      }
    }
    frontier = std::move(next);
  }
  if (frontier.empty()) out.stabilized = true;
  out.count = (i64)counted.size();
  return out;
}

CurvedDiagram curved_diagram(const Dimer& dimer) {
  CurvedDiagram diag;
  for (int e = 0; e < dimer.edge_count(); ++e) diag.edge_objects.push_back(e);

  for (int n = 0; n < dimer.node_count(); ++n) {
    CurvedNodeObject obj;
    obj.node = dimer.node_name(n);
    obj.edges = dimer.star(n);
    if (dimer.is_black(n)) std::reverse(obj.edges.begin(), obj.edges.end());
    diag.node_objects.push_back(obj);

    const auto& cyc = diag.node_objects.back().edges;
    const int r1 = (int)cyc.size();  // r + 1 in the cyclic quiver
    for (int i = 0; i < r1; ++i) {
      CurvedMorphism mor;
      mor.edge = cyc[i];
      mor.node = obj.node;
      mor.position = i;
      // p_e maps to the complementary path around the cycle, applied
      // starting with the next arrow after a_e.
      for (int k = 1; k < r1; ++k) mor.p_image.push_back(cyc[(i + k) % r1]);
      // Endpoint consistency through the vertex map s_e -> u_i,
      // t_e -> u_{i+1}: the image of p_e must run u_{i+1} -> ... -> u_i.
      mor.composes = true;
      int at = (i + 1) % r1;
      for (int k = 0; k < (int)mor.p_image.size(); ++k) {
        if (mor.p_image[k] != cyc[at]) mor.composes = false;
        at = (at + 1) % r1;
      }
      if (at != i) mor.composes = false;
      // Curvature: image of a_e p_e + p_e a_e must be the two cyclic terms
      // of W_n that start (resp. end) with applying a_e.
      std::vector<int> image1 = mor.p_image;       // a.(p image): p first
      image1.push_back(cyc[i]);
      std::vector<int> term_next;                  // term starting at i+1
      for (int k = 0; k < r1; ++k) term_next.push_back(cyc[(i + 1 + k) % r1]);
      std::vector<int> image2{cyc[i]};             // (p image).a: a first
      image2.insert(image2.end(), mor.p_image.begin(), mor.p_image.end());
      std::vector<int> term_here;                  // term starting at i
      for (int k = 0; k < r1; ++k) term_here.push_back(cyc[(i + k) % r1]);
      mor.curvature_matches = image1 == term_next && image2 == term_here;
      if (!mor.composes || !mor.curvature_matches) diag.all_checks_pass = false;
      diag.morphisms.push_back(std::move(mor));
    }
  }
  return diag;
}

}  // namespace dimertoric
