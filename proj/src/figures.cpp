#include "dimertoric/figures.hpp"

#include <cstdio>
#include <random>
#include <sstream>

namespace dimertoric {

namespace {

struct P {
  double x = 0, y = 0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Svg {
  std::ostringstream out;
  Svg(int w, int h) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
        << "\">\n"
        << "<defs><marker id=\"arr\" viewBox=\"0 0 10 10\" refX=\"9\" "
           "refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" "
           "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" "
           "fill=\"#333\"/></marker></defs>\n"
        << "<rect width=\"" << w << "\" height=\"" << h
        << "\" fill=\"#ffffff\"/>\n";
  }
  void line(P a, P b, const std::string& style) {
    out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
        << num(b.x) << "\" y2=\"" << num(b.y) << "\" " << style << "/>\n";
  }
  void circle(P c, double r, const std::string& style) {
    out << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\""
        << num(r) << "\" " << style << "/>\n";
  }
  void text(P at, const std::string& s, const std::string& style) {
    out << "<text x=\"" << num(at.x) << "\" y=\"" << num(at.y)
        << "\" font-family=\"monospace\" font-size=\"11\" " << style << ">"
        << s << "</text>\n";
  }
  void raw(const std::string& s) { out << s; }
  std::string done() {
    out << "</svg>\n";
    return out.str();
  }
};

const char* kEdgeStyle = "stroke=\"#555\" stroke-width=\"1.4\"";
const char* kThin = "stroke=\"#bbb\" stroke-width=\"0.8\"";

// Node layout in the unit square: model positions when complete, otherwise a
// seeded grid.
std::vector<P> node_layout(const Dimer& d, unsigned seed) {
  int n = d.node_count();
  std::vector<P> pos(n);
  bool have_all = true;
  for (int v = 0; v < n && have_all; ++v)
    have_all = d.model().position_num.count(d.node_name(v)) > 0;
  if (have_all) {
    double den = (double)d.model().position_den;
    for (int v = 0; v < n; ++v) {
      Vec2 p = d.model().position_num.at(d.node_name(v));
      pos[v] = {p.x / den, p.y / den};
    }
    return pos;
  }
  int cols = 1;
  while (cols * cols < n) ++cols;
  std::mt19937 rng(seed);
  for (int v = 0; v < n; ++v) {
    double jx = (double)(int)(rng() % 17 - 8) / 400.0;
    double jy = (double)(int)(rng() % 17 - 8) / 400.0;
    pos[v] = {(v % cols + 0.5) / cols + jx, (v / cols + 0.5) / cols + jy};
  }
  return pos;
}

P to_px(P unit, double scale, double margin) {
  return {margin + unit.x * scale, margin + (1.0 - unit.y) * scale};
}

std::string dimer_figure(const Dimer& d, unsigned seed) {
  const double S = 480, M = 40;
  Svg svg((int)(S + 2 * M), (int)(S + 2 * M));
  svg.raw("<clipPath id=\"dom\"><rect x=\"" + num(M) + "\" y=\"" + num(M) +
          "\" width=\"" + num(S) + "\" height=\"" + num(S) +
          "\"/></clipPath>\n");
  svg.line({M, M}, {M + S, M}, kThin);
  svg.line({M + S, M}, {M + S, M + S}, kThin);
  svg.line({M + S, M + S}, {M, M + S}, kThin);
  svg.line({M, M + S}, {M, M}, kThin);
  std::vector<P> pos = node_layout(d, seed);
  svg.raw("<g clip-path=\"url(#dom)\">\n");
  for (int e = 0; e < d.edge_count(); ++e) {
    P b = pos[d.black_end(e)];
    Vec2 s = d.shift(e);
    P w = {pos[d.white_end(e)].x + s.x, pos[d.white_end(e)].y + s.y};
    for (int ox = -1; ox <= 1; ++ox)
      for (int oy = -1; oy <= 1; ++oy)
        svg.line(to_px({b.x + ox, b.y + oy}, S, M),
                 to_px({w.x + ox, w.y + oy}, S, M), kEdgeStyle);
    P mid = to_px({(b.x + w.x) / 2, (b.y + w.y) / 2}, S, M);
    svg.text({mid.x + 3, mid.y - 3}, d.edge_id(e), "fill=\"#1b6ca8\"");
  }
  svg.raw("</g>\n");
  for (int v = 0; v < d.node_count(); ++v) {
    P c = to_px(pos[v], S, M);
    if (d.is_black(v))
      svg.circle(c, 6, "fill=\"#111\"");
    else
      svg.circle(c, 6, "fill=\"#fff\" stroke=\"#111\" stroke-width=\"1.5\"");
    svg.text({c.x + 8, c.y + 4}, d.node_name(v), "fill=\"#333\"");
  }
  return svg.done();
}

// Face centroids from the canonical planar lift of each face boundary.
std::vector<P> face_layout(const Dimer& d, unsigned seed) {
  int nf = (int)d.faces().size();
  std::vector<P> pos(nf);
  bool have_all = true;
  for (int v = 0; v < d.node_count() && have_all; ++v)
    have_all = d.model().position_num.count(d.node_name(v)) > 0;
  if (!have_all) {
    int cols = 1;
    while (cols * cols < nf) ++cols;
    std::mt19937 rng(seed);
    for (int f = 0; f < nf; ++f) {
      double jx = (double)(int)(rng() % 17 - 8) / 400.0;
      double jy = (double)(int)(rng() % 17 - 8) / 400.0;
      pos[f] = {(f % cols + 0.5) / cols + jx, (f / cols + 0.5) / cols + jy};
    }
    return pos;
  }
  double den = (double)d.model().position_den;
  for (const Face& f : d.faces()) {
    double sx = 0, sy = 0;
    for (int dart : f.darts) {
      Vec2 p = d.model().position_num.at(d.node_name(d.dart_tail(dart)));
      Vec2 off = d.dart_offset(dart);
      sx += p.x / den + off.x;
      sy += p.y / den + off.y;
    }
    pos[f.id] = {sx / f.darts.size(), sy / f.darts.size()};
  }
  return pos;
}

std::string quiver_figure(const Dimer& d, unsigned seed) {
  const double S = 480, M = 40;
  Svg svg((int)(S + 2 * M), (int)(S + 2 * M));
  std::vector<P> pos = face_layout(d, seed);
  const Quiver& q = d.quiver();
  std::map<std::pair<int, int>, int> seen;
  for (const Arrow& a : q.arrows) {
    P s = to_px(pos[a.source], S, M);
    P t = to_px(pos[a.target], S, M);
    int k = seen[{std::min(a.source, a.target),
                  std::max(a.source, a.target)}]++;
    if (a.source == a.target) {
      double r = 16.0 + 10.0 * k;
      svg.circle({s.x + r, s.y}, r,
                 "fill=\"none\" stroke=\"#333\" stroke-width=\"1.4\"");
      svg.text({s.x + 2 * r + 4, s.y + 4}, d.edge_id(a.id), "fill=\"#1b6ca8\"");
      continue;
    }
    // parallel arrows get a growing perpendicular offset
    double nx = -(t.y - s.y), ny = t.x - s.x;
    P so = {s.x + nx * 0.02 * (k + 1), s.y + ny * 0.02 * (k + 1)};
    P to = {t.x + nx * 0.02 * (k + 1), t.y + ny * 0.02 * (k + 1)};
    svg.line(so, to,
             "stroke=\"#333\" stroke-width=\"1.4\" marker-end=\"url(#arr)\"");
    svg.text({(so.x + to.x) / 2 + 4, (so.y + to.y) / 2 - 4}, d.edge_id(a.id),
             "fill=\"#1b6ca8\"");
  }
  for (size_t fId = 0; fId < pos.size(); ++fId) {
    P c = to_px(pos[fId], S, M);
    svg.circle(c, 10, "fill=\"#f4f4f4\" stroke=\"#111\" stroke-width=\"1.5\"");
    svg.text({c.x - 3, c.y + 4}, std::to_string(fId), "fill=\"#111\"");
  }
  return svg.done();
}

std::string polygon_figure(const Polygon& poly, const ClassificationReport* cls) {
  i64 xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (Vec2 v : poly.hull) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const double U = 70, M = 50;
  double W = (xmax - xmin + 2) * U + 2 * M, H = (ymax - ymin + 2) * U + 2 * M;
  auto px = [&](double x, double y) -> P {
    return {M + (x - xmin + 1) * U, H - M - (y - ymin + 1) * U};
  };
  Svg svg((int)W, (int)H);
  for (i64 x = xmin - 1; x <= xmax + 1; ++x)
    svg.line(px((double)x, ymin - 1.0), px((double)x, ymax + 1.0), kThin);
  for (i64 y = ymin - 1; y <= ymax + 1; ++y)
    svg.line(px(xmin - 1.0, (double)y), px(xmax + 1.0, (double)y), kThin);
  std::string hull = "<polygon points=\"";
  for (Vec2 v : poly.hull) {
    P p = px((double)v.x, (double)v.y);
    hull += num(p.x) + "," + num(p.y) + " ";
  }
  hull += "\" fill=\"#dce9f5\" fill-opacity=\"0.6\" stroke=\"#1b6ca8\" "
          "stroke-width=\"2\"/>\n";
  svg.raw(hull);
  for (const auto& [pt, role] : poly.role) {
    P p = px((double)pt.x, (double)pt.y);
    int mult = 0;
    if (auto it = poly.multiplicity.find(pt); it != poly.multiplicity.end())
      mult = it->second;
    if (role == PointRole::Interior)
      svg.circle(p, 5, "fill=\"#fff\" stroke=\"#c0392b\" stroke-width=\"2\"");
    else
      svg.circle(p, 5, "fill=\"#1b6ca8\"");
    svg.text({p.x + 8, p.y - 8},
             "(" + std::to_string(pt.x) + "," + std::to_string(pt.y) + ") x" +
                 std::to_string(mult),
             "fill=\"#333\"");
  }
  if (cls) {
    P o = px((double)cls->origin.x, (double)cls->origin.y);
    svg.line({o.x - 9, o.y}, {o.x + 9, o.y},
             "stroke=\"#c0392b\" stroke-width=\"2\"");
    svg.line({o.x, o.y - 9}, {o.x, o.y + 9},
             "stroke=\"#c0392b\" stroke-width=\"2\"");
  }
  return svg.done();
}

std::string hom_figure(const Collection& col, const VerificationReport& ver) {
  int n = (int)col.bundles.size();
  std::vector<int> order = ver.order;
  if ((int)order.size() != n) {
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
  }
  const double DX = 150, M = 70;
  double W = M * 2 + DX * (n - 1), H = 360;
  Svg svg((int)W, (int)H);
  std::vector<P> pos(n);
  for (int i = 0; i < n; ++i)
    pos[order[i]] = {M + DX * i, i % 2 == 0 ? 120.0 : 240.0};
  for (const PairCohomology& p : ver.pairs) {
    if (p.h0 <= 0) continue;
    P s = pos[p.from], t = pos[p.to];
    svg.line({s.x, s.y}, {t.x, t.y},
             "stroke=\"#333\" stroke-width=\"1.3\" marker-end=\"url(#arr)\"");
    svg.text({(s.x + t.x) / 2 + 4, (s.y + t.y) / 2 - 4},
             std::to_string(p.h0), "fill=\"#1b6ca8\"");
  }
  for (int v = 0; v < n; ++v) {
    svg.circle(pos[v], 14, "fill=\"#f4f4f4\" stroke=\"#111\" stroke-width=\"1.5\"");
    svg.text({pos[v].x - 4, pos[v].y + 4}, std::to_string(v), "fill=\"#111\"");
    std::string nf = "[";
    for (size_t i = 0; i < col.bundles[v].normal_form.size(); ++i)
      nf += (i ? "," : "") + std::to_string(col.bundles[v].normal_form[i]);
    nf += "]";
    svg.text({pos[v].x - 20, pos[v].y + 32}, nf, "fill=\"#555\"");
  }
  return svg.done();
}

}  // namespace

std::map<std::string, std::string> render_figures(
    const Dimer& dimer, const Polygon* poly, const ClassificationReport* cls,
    const Collection* col, const VerificationReport* ver, unsigned seed) {
  std::map<std::string, std::string> out;
  out["dimer.svg"] = dimer_figure(dimer, seed);
  out["quiver.svg"] = quiver_figure(dimer, seed);
  if (poly) out["polygon.svg"] = polygon_figure(*poly, cls);
  if (col && ver) out["hom.svg"] = hom_figure(*col, *ver);
  return out;
}

}  // namespace dimertoric
