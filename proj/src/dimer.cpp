#include "dimertoric/dimer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dimertoric {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

int Dimer::node_index(const std::string& name) const {
  auto it = node_index_.find(name);
  if (it == node_index_.end())
    throw StructuralError("unknown node '" + name + "'");
  return it->second;
}

int Dimer::edge_index(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end())
    throw StructuralError("unknown edge '" + id + "'");
  return it->second;
}

int Dimer::dart_tail(int d) const {
  int e = edge_of_dart(d);
  return dir_of_dart(d) == BW ? edge_black_[e] : edge_white_[e];
}

int Dimer::dart_head(int d) const {
  int e = edge_of_dart(d);
  return dir_of_dart(d) == BW ? edge_white_[e] : edge_black_[e];
}

Vec2 Dimer::dart_delta(int d) const {
  int e = edge_of_dart(d);
  return dir_of_dart(d) == BW ? shift(e) : -shift(e);
}

int Dimer::next_dart_in_face(int d) const {
  int h = dart_head(d);
  const auto& st = star_[h];
  int e = edge_of_dart(d);
  size_t i = 0;
  while (st[i] != e) ++i;
  int prev = st[(i + st.size() - 1) % st.size()];
  return dart_of(prev, is_black(h) ? BW : WB);
}

ValidationReport Dimer::validate(const DimerModel& model) {
  ValidationReport rep;
  auto& errs = rep.errors;

  std::map<std::string, int> nodes;
  for (const auto& b : model.blacks)
    if (!nodes.emplace(b, 0).second) errs.push_back("duplicate node id '" + b + "'");
  for (const auto& w : model.whites)
    if (!nodes.emplace(w, 1).second) errs.push_back("duplicate node id '" + w + "'");

  std::set<std::string> edge_ids;
  std::map<std::string, std::set<std::string>> incident;
  for (const auto& e : model.edges) {
    if (!edge_ids.insert(e.id).second)
      errs.push_back("duplicate edge id '" + e.id + "'");
    auto bi = nodes.find(e.black);
    auto wi = nodes.find(e.white);
    if (bi == nodes.end() || bi->second != 0)
      errs.push_back("edge '" + e.id + "' has non-black endpoint '" + e.black + "'");
    if (wi == nodes.end() || wi->second != 1)
      errs.push_back("edge '" + e.id + "' has non-white endpoint '" + e.white + "'");
    incident[e.black].insert(e.id);
    incident[e.white].insert(e.id);
  }
  if (model.edges.empty()) errs.push_back("model has no edges");

  for (const auto& [name, colour] : nodes) {
    (void)colour;
    auto inc = incident.find(name);
    if (inc == incident.end() || inc->second.empty()) {
      errs.push_back("isolated node '" + name + "'");
      continue;
    }
    auto co = model.cyclic_order.find(name);
    if (co == model.cyclic_order.end()) {
      errs.push_back("missing cyclic_order for node '" + name + "'");
      continue;
    }
    std::multiset<std::string> listed(co->second.begin(), co->second.end());
    std::multiset<std::string> expect(inc->second.begin(), inc->second.end());
    if (listed != expect)
      errs.push_back("cyclic_order of node '" + name +
                     "' does not list its incident edges exactly once each");
  }
  for (const auto& [name, order] : model.cyclic_order) {
    (void)order;
    if (!nodes.count(name))
      errs.push_back("cyclic_order mentions unknown node '" + name + "'");
  }
  if (model.position_den < 1)
    errs.push_back("position denominator must be >= 1");
  for (const auto& [name, pos] : model.position_num) {
    (void)pos;
    if (!nodes.count(name))
      errs.push_back("positions mention unknown node '" + name + "'");
  }
  if (!model.position_num.empty() &&
      model.position_num.size() != nodes.size())
    rep.warnings.push_back(
        "positions given for only some nodes; figures will use the fallback layout");
  if (model.blacks.size() != model.whites.size())
    rep.warnings.push_back("unequal node colour counts: no perfect matching can exist");

  if (!errs.empty()) return rep;

  // Structure is sound: trace faces on a scratch compilation.
  Dimer d;
  d.model_ = model;
  d.node_names_ = model.blacks;
  d.node_names_.insert(d.node_names_.end(), model.whites.begin(), model.whites.end());
  for (size_t i = 0; i < d.node_names_.size(); ++i)
    d.node_index_[d.node_names_[i]] = (int)i;
  for (size_t e = 0; e < model.edges.size(); ++e) {
    d.edge_index_[model.edges[e].id] = (int)e;
    d.edge_black_.push_back(d.node_index_[model.edges[e].black]);
    d.edge_white_.push_back(d.node_index_[model.edges[e].white]);
  }
  d.star_.resize(d.node_names_.size());
  for (const auto& [name, order] : model.cyclic_order) {
    auto& st = d.star_[d.node_index_[name]];
    for (const auto& eid : order) st.push_back(d.edge_index_[eid]);
  }
  d.build_faces();
  rep.faces = (int)d.faces_.size();

  i64 euler = (i64)model.blacks.size() + (i64)model.whites.size() -
              (i64)model.edges.size() + (i64)d.faces_.size();
  if (euler != 0)
    errs.push_back("Euler relation violated: |B|+|W|-|E|+|F| = " +
                   std::to_string(euler) + ", expected 0 on the torus");
  for (const auto& f : d.faces_) {
    Vec2 total{0, 0};
    for (int dart : f.darts) total += d.dart_delta(dart);
    if (total != Vec2{0, 0})
      errs.push_back("face " + std::to_string(f.id) +
                     " is not a disk: boundary walk has net shift " +
                     to_string(total));
  }
  rep.valid = errs.empty();
  return rep;
}

void Dimer::build_faces() {
  const int ndarts = 2 * edge_count();
  dart_face_.assign(ndarts, -1);
  dart_offset_.assign(ndarts, Vec2{0, 0});

  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(ndarts, 0);
  for (int d0 = 0; d0 < ndarts; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      if (seen[d])
        throw InternalError("face tracing revisited a dart; rotation system broken");
      seen[d] = 1;
      orbit.push_back(d);
      d = next_dart_in_face(d);
    } while (d != d0);
    orbits.push_back(std::move(orbit));
  }

  // Canonical start = minimal (tail node name, edge id) incidence.
  auto key = [&](int d) {
    return std::pair<std::string, std::string>(node_name(dart_tail(d)),
                                               edge_id(edge_of_dart(d)));
  };
  std::vector<std::pair<std::pair<std::string, std::string>, size_t>> order;
  for (size_t i = 0; i < orbits.size(); ++i) {
    auto& orb = orbits[i];
    size_t best = 0;
    for (size_t j = 1; j < orb.size(); ++j)
      if (key(orb[j]) < key(orb[best])) best = j;
    std::rotate(orb.begin(), orb.begin() + best, orb.end());
    order.push_back({key(orb[0]), i});
  }
  std::sort(order.begin(), order.end());

  faces_.clear();
  for (size_t rank = 0; rank < order.size(); ++rank) {
    Face f;
    f.id = (int)rank;
    f.darts = orbits[order[rank].second];
    Vec2 off{0, 0};
    for (int d : f.darts) {
      dart_face_[d] = f.id;
      dart_offset_[d] = off;
      off += dart_delta(d);
    }
    faces_.push_back(std::move(f));
  }
}

void Dimer::build_quiver() {
  const int E = edge_count();
  const int F = (int)faces_.size();
  quiver_.vertex_count = F;
  quiver_.arrows.resize(E);
  for (int e = 0; e < E; ++e) {
    Arrow& a = quiver_.arrows[e];
    a.id = e;
    a.source = dart_face_[dart_of(e, WB)];
    a.target = dart_face_[dart_of(e, BW)];
    a.voltage = dart_offset_[dart_of(e, WB)] - shift(e) - dart_offset_[dart_of(e, BW)];
  }

  // Spanning tree over arrows in edge order (both directions usable).
  std::vector<int> comp(F);
  for (int i = 0; i < F; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  std::vector<std::vector<std::pair<int, int>>> tree_adj(F);  // (other, arrow)
  for (int e = 0; e < E; ++e) {
    int s = find(quiver_.arrows[e].source), t = find(quiver_.arrows[e].target);
    if (s != t) {
      comp[s] = t;
      tree_adj[quiver_.arrows[e].source].push_back({quiver_.arrows[e].target, e});
      tree_adj[quiver_.arrows[e].target].push_back({quiver_.arrows[e].source, e});
    }
  }
  for (int i = 0; i < F; ++i)
    if (find(i) != find(0))
      throw InternalError("quiver is disconnected; dual graph of a torus map must be connected");

  quiver_.vertex_lift.assign(F, Vec2{0, 0});
  quiver_.tree_walk.assign(F, {});
  std::vector<char> visited(F, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, e] : tree_adj[v]) {
      if (visited[u]) continue;
      visited[u] = 1;
      const Arrow& a = quiver_.arrows[e];
      quiver_.tree_walk[u] = quiver_.tree_walk[v];
      if (a.source == v && a.target == u) {
        quiver_.vertex_lift[u] = quiver_.vertex_lift[v] + a.voltage;
        quiver_.tree_walk[u].push_back(e + 1);
      } else {
        quiver_.vertex_lift[u] = quiver_.vertex_lift[v] - a.voltage;
        quiver_.tree_walk[u].push_back(-(e + 1));
      }
      stack.push_back(u);
    }
  }
  for (int e = 0; e < E; ++e) {
    Arrow& a = quiver_.arrows[e];
    a.lift = quiver_.vertex_lift[a.source] + a.voltage - quiver_.vertex_lift[a.target];
  }

  // Relation paths.  Around a white node arrows run clockwise, around a
  // black node counterclockwise; both complements are paths t(a) -> s(a).
  quiver_.p_plus.assign(E, {});
  quiver_.p_minus.assign(E, {});
  for (int e = 0; e < E; ++e) {
    const auto& wstar = star_[edge_white_[e]];
    size_t i = 0;
    while (wstar[i] != e) ++i;
    for (size_t k = wstar.size() - 1; k >= 1; --k)
      quiver_.p_plus[e].push_back(wstar[(i + k) % wstar.size()]);
    const auto& bstar = star_[edge_black_[e]];
    i = 0;
    while (bstar[i] != e) ++i;
    for (size_t k = 1; k <= bstar.size() - 1; ++k)
      quiver_.p_minus[e].push_back(bstar[(i + k) % bstar.size()]);
  }
  for (int e = 0; e < E; ++e) {
    for (const auto* rel : {&quiver_.p_plus[e], &quiver_.p_minus[e]}) {
      int at = quiver_.arrows[e].target;
      for (int ae : *rel) {
        if (quiver_.arrows[ae].source != at)
          throw InternalError("relation path does not compose");
        at = quiver_.arrows[ae].target;
      }
      if (at != quiver_.arrows[e].source)
        throw InternalError("relation path does not land on the arrow source");
    }
  }
}

void Dimer::build_zigzags() {
  const int ndarts = 2 * edge_count();
  auto next = [&](int d) {
    int h = dart_head(d);
    const auto& st = star_[h];
    int e = edge_of_dart(d);
    size_t i = 0;
    while (st[i] != e) ++i;
    int e2 = is_black(h) ? st[(i + 1) % st.size()]
                         : st[(i + st.size() - 1) % st.size()];
    return dart_of(e2, is_black(h) ? BW : WB);
  };

  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(ndarts, 0);
  for (int d0 = 0; d0 < ndarts; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      seen[d] = 1;
      orbit.push_back(d);
      d = next(d);
    } while (d != d0);
    orbits.push_back(std::move(orbit));
  }

  auto key = [&](int d) {
    return std::pair<std::string, int>(edge_id(edge_of_dart(d)), dir_of_dart(d));
  };
  std::vector<std::pair<std::pair<std::string, int>, size_t>> order;
  for (size_t i = 0; i < orbits.size(); ++i) {
    auto& orb = orbits[i];
    size_t best = 0;
    for (size_t j = 1; j < orb.size(); ++j)
      if (key(orb[j]) < key(orb[best])) best = j;
    std::rotate(orb.begin(), orb.begin() + best, orb.end());
    order.push_back({key(orb[0]), i});
  }
  std::sort(order.begin(), order.end());

  zigzags_.clear();
  for (size_t rank = 0; rank < order.size(); ++rank) {
    ZigzagPath z;
    z.id = (int)rank;
    z.darts = orbits[order[rank].second];
    for (int d : z.darts) z.homology += dart_delta(d);
    zigzags_.push_back(std::move(z));
  }
}

ConsistencyReport Dimer::consistency() const {
  ConsistencyReport rep;
  for (const auto& z : zigzags_) {
    if (z.homology == Vec2{0, 0}) {
      rep.trivial_class_free = false;
      rep.failures.push_back("zig-zag path " + std::to_string(z.id) +
                             " has homology class (0,0)");
    }
    std::set<int> used;
    for (int d : z.darts)
      if (!used.insert(d).second) {
        rep.no_self_crossing = false;
        rep.failures.push_back("zig-zag path " + std::to_string(z.id) +
                               " repeats edge '" + edge_id(edge_of_dart(d)) +
                               "' with the same orientation in one period");
      }
  }
  std::vector<int> orbit_of(2 * edge_count(), -1);
  for (const auto& z : zigzags_)
    for (int d : z.darts) orbit_of[d] = z.id;
  auto positively_parallel = [](Vec2 a, Vec2 b) {
    return cross(a, b) == 0 && dot(a, b) > 0;
  };
  std::set<std::pair<int, int>> reported;
  for (int e = 0; e < edge_count(); ++e) {
    int za = orbit_of[dart_of(e, BW)], zb = orbit_of[dart_of(e, WB)];
    Vec2 ca = zigzags_[za].homology, cb = zigzags_[zb].homology;
    bool bad = (za == zb) ||
               ((ca != Vec2{0, 0} || cb != Vec2{0, 0}) && positively_parallel(ca, cb));
    if (bad && reported.insert({std::min(za, zb), std::max(za, zb)}).second) {
      rep.no_parallel_share = false;
      rep.failures.push_back(
          za == zb ? "zig-zag path " + std::to_string(za) + " meets edge '" +
                         edge_id(e) + "' twice"
                   : "zig-zag paths " + std::to_string(za) + " and " +
                         std::to_string(zb) + " have positively parallel classes " +
                         to_string(ca) + ", " + to_string(cb) +
                         " and share edge '" + edge_id(e) + "'");
    }
  }
  return rep;
}

Dimer Dimer::compile(const DimerModel& model) {
  ValidationReport rep = validate(model);
  if (!rep.valid)
    throw StructuralError("invalid dimer model: " + join(rep.errors, "; "));
  Dimer d;
  d.model_ = model;
  d.node_names_ = model.blacks;
  d.node_names_.insert(d.node_names_.end(), model.whites.begin(), model.whites.end());
  for (size_t i = 0; i < d.node_names_.size(); ++i)
    d.node_index_[d.node_names_[i]] = (int)i;
  for (size_t e = 0; e < model.edges.size(); ++e) {
    d.edge_index_[model.edges[e].id] = (int)e;
    d.edge_black_.push_back(d.node_index_.at(model.edges[e].black));
    d.edge_white_.push_back(d.node_index_.at(model.edges[e].white));
  }
  d.star_.resize(d.node_names_.size());
  for (const auto& [name, cyc] : model.cyclic_order) {
    auto& st = d.star_[d.node_index_.at(name)];
    for (const auto& eid : cyc) st.push_back(d.edge_index_.at(eid));
  }
  d.build_faces();
  d.build_quiver();
  d.build_zigzags();
  return d;
}

}  // namespace dimertoric
