#include "dimertoric/path_algebra.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace dimertoric {

Path make_path(const Quiver& q, int source, std::vector<int> arrows) {
  int at = source;
  for (int a : arrows) {
    if (a < 0 || a >= (int)q.arrows.size())
      throw StructuralError("path mentions unknown arrow " + std::to_string(a));
    if (q.arrows[a].source != at)
      throw StructuralError("path does not compose at arrow " + std::to_string(a));
    at = q.arrows[a].target;
  }
  return Path{source, std::move(arrows)};
}

WeightTable::WeightTable(const Dimer& dimer) : dimer_(&dimer) {
  matchings_ = enumerate_matchings(dimer);
  if (matchings_.empty())
    throw StructuralError("model admits no perfect matching");
  const int E = dimer.edge_count();
  const int F = dimer.quiver().vertex_count;
  for (const auto& pm : matchings_) {
    classes_.push_back(matching_class(dimer, pm, matchings_[0]));
    std::vector<char> in(E, 0);
    for (int e : pm.edges) in[e] = 1;
    in_matching_.push_back(std::move(in));
  }
  tree_offset_.assign(matchings_.size(), std::vector<i64>(F, 0));
  for (size_t pm = 0; pm < matchings_.size(); ++pm) {
    for (int v = 0; v < F; ++v) {
      i64 off = 0;
      for (int signed_arrow : dimer.quiver().tree_walk[v]) {
        int e = std::abs(signed_arrow) - 1;
        if (in_matching_[pm][e]) off += signed_arrow > 0 ? 1 : -1;
      }
      tree_offset_[pm][v] = off;
    }
  }

  // The weight pairing requires the shift coordinates to form a positively
  // oriented homology basis (the orientation induced by the counterclockwise
  // node order).  A mirrored encoding flips an intersection sign and breaks
  // the pairing already on single arrows; and since class weights are
  // additive under extension, checking every arrow certifies every path.
  for (int a = 0; a < E; ++a) {
    PathClass cls = path_class(Path{dimer.quiver().arrows[a].source, {a}});
    for (size_t pm = 0; pm < matchings_.size(); ++pm) {
      i64 predicted;
      try {
        predicted = class_weight(cls, (int)pm);
      } catch (const InternalError&) {
        predicted = -1;
      }
      if (predicted != (in_matching_[pm][a] ? 1 : 0))
        throw StructuralError(
            "weight pairing failed on arrow " + dimer.edge_id(a) +
            ": the shift coordinates appear to use a negatively oriented "
            "basis; re-express the shifts so their orientation matches the "
            "counterclockwise node order");
    }
  }
}

i64 WeightTable::path_weight(const Path& p, int pm) const {
  i64 w = 0;
  for (int a : p.arrows)
    if (in_matching_[pm][a]) ++w;  // arrow id == edge index
  return w;
}

PathClass WeightTable::path_class(const Path& p) const {
  PathClass cls;
  cls.source = p.source;
  cls.target = p.target(dimer_->quiver());
  for (int a : p.arrows) cls.lift += dimer_->quiver().arrows[a].lift;
  cls.ref_weight = path_weight(p, 0);
  return cls;
}

PathClass WeightTable::extend(const PathClass& cls, int arrow) const {
  const Arrow& a = dimer_->quiver().arrows[arrow];
  if (a.source != cls.target)
    throw StructuralError("class extension does not compose");
  PathClass out = cls;
  out.target = a.target;
  out.lift += a.lift;
  if (in_matching_[0][arrow]) ++out.ref_weight;
  return out;
}

i64 WeightTable::class_weight(const PathClass& cls, int pm) const {
  i64 w = cls.ref_weight + dot(cls.lift, classes_[pm]) +
          (tree_offset_[pm][cls.target] - tree_offset_[pm][cls.source]) -
          (tree_offset_[0][cls.target] - tree_offset_[0][cls.source]);
  if (w < 0)
    throw InternalError("negative matching weight for a path class");
  return w;
}

std::vector<Path> fterm_neighbors(const Quiver& q, const Path& p) {
  std::vector<Path> out;
  const int n = (int)p.arrows.size();
  auto try_rewrite = [&](const std::vector<int>& from, const std::vector<int>& to,
                         int at) {
    if (at + (int)from.size() > n) return;
    for (size_t k = 0; k < from.size(); ++k)
      if (p.arrows[at + k] != from[k]) return;
    Path np;
    np.source = p.source;
    np.arrows.assign(p.arrows.begin(), p.arrows.begin() + at);
    np.arrows.insert(np.arrows.end(), to.begin(), to.end());
    np.arrows.insert(np.arrows.end(), p.arrows.begin() + at + from.size(),
                     p.arrows.end());
    out.push_back(std::move(np));
  };
  for (int i = 0; i < n; ++i) {
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      try_rewrite(q.p_plus[a], q.p_minus[a], i);
      try_rewrite(q.p_minus[a], q.p_plus[a], i);
    }
  }
  return out;
}

Equivalence fterm_equivalent(const WeightTable& wt, const Path& p, const Path& q,
                             int length_bound) {
  const Quiver& quiv = wt.dimer().quiver();
  if (wt.path_class(p) != wt.path_class(q)) return Equivalence::No;
  if (p.source != q.source) return Equivalence::No;
  if ((int)p.arrows.size() > length_bound || (int)q.arrows.size() > length_bound)
    return Equivalence::Inconclusive;

  std::set<std::vector<int>> seen{p.arrows};
  std::deque<std::vector<int>> queue{p.arrows};
  bool truncated = false;
  while (!queue.empty()) {
    Path cur{p.source, queue.front()};
    queue.pop_front();
    if (cur.arrows == q.arrows) return Equivalence::Yes;
    for (Path& nb : fterm_neighbors(quiv, cur)) {
      if ((int)nb.arrows.size() > length_bound) {
        truncated = true;
        continue;
      }
      if (seen.insert(nb.arrows).second) queue.push_back(std::move(nb.arrows));
    }
  }
  return truncated ? Equivalence::Inconclusive : Equivalence::No;
}

HomDimTable quotient_hom_dims(const WeightTable& wt, const PerfectMatching& d0) {
  const Quiver& q = wt.dimer().quiver();
  const int F = q.vertex_count;
  std::vector<char> removed(q.arrows.size(), 0);
  for (int e : d0.edges) removed[e] = 1;
  std::vector<std::vector<int>> out_arrows(F);
  for (const Arrow& a : q.arrows)
    if (!removed[a.id]) out_arrows[a.source].push_back(a.id);

  // Acyclicity check with a witness.
  std::vector<int> colour(F, 0), parent_arrow(F, -1), parent(F, -1);
  std::function<std::vector<int>(int)> dfs = [&](int v) -> std::vector<int> {
    colour[v] = 1;
    for (int a : out_arrows[v]) {
      int u = q.arrows[a].target;
      if (colour[u] == 1) {
        std::vector<int> cycle{a};
        for (int x = v; x != u; x = parent[x]) cycle.push_back(parent_arrow[x]);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (colour[u] == 0) {
        parent[u] = v;
        parent_arrow[u] = a;
        auto cyc = dfs(u);
        if (!cyc.empty()) return cyc;
      }
    }
    colour[v] = 2;
    return {};
  };
  for (int v = 0; v < F; ++v) {
    if (colour[v] != 0) continue;
    auto cyc = dfs(v);
    if (!cyc.empty()) {
      std::string msg =
          "infinite-dimensional quotient: restricted quiver has directed cycle";
      for (int a : cyc)
        msg += " --" + wt.dimer().edge_id(a) + "--> " +
               std::to_string(q.arrows[a].target);
      throw StructuralError(msg);
    }
  }

  HomDimTable table;
  table.vertices = F;
  table.dim.assign(F, std::vector<i64>(F, 0));
  for (int v = 0; v < F; ++v) {
    std::vector<std::set<PathClass>> classes(F);
    std::function<void(const PathClass&)> walk = [&](const PathClass& cls) {
      if (!classes[cls.target].insert(cls).second)
        return;  // class already seen; extensions of an equal class coincide
      for (int a : out_arrows[cls.target]) walk(wt.extend(cls, a));
    };
    // Seed with the length-0 class at v.
    PathClass unit;
    unit.source = unit.target = v;
    walk(unit);
    for (int w = 0; w < F; ++w) table.dim[v][w] = (i64)classes[w].size();
  }
  for (int v = 0; v < F; ++v)
    for (int w = 0; w < F; ++w) table.total += table.dim[v][w];
  return table;
}

}  // namespace dimertoric
