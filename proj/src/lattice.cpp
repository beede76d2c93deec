#include "dimertoric/lattice.hpp"

#include <algorithm>

namespace dimertoric {

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Vec2> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() <= 2) {
    // Degenerate (collinear input): keep the two extreme points.
    return hull;
  }
  return hull;
}

std::vector<Vec2> boundary_lattice_points(const std::vector<Vec2>& hull) {
  if (hull.size() < 3) throw std::invalid_argument("hull is not 2-dimensional");
  std::vector<Vec2> out;
  const size_t n = hull.size();
  for (size_t i = 0; i < n; ++i) {
    Vec2 a = hull[i], b = hull[(i + 1) % n];
    Vec2 d = b - a;
    i64 g = gcd_i64(d.x, d.y);
    Vec2 step{d.x / g, d.y / g};
    for (i64 t = 0; t < g; ++t) out.push_back(a + t * step);
  }
  return out;
}

i64 twice_area(const std::vector<Vec2>& hull) {
  i64 s = 0;
  const size_t n = hull.size();
  for (size_t i = 0; i < n; ++i) s += cross(hull[i], hull[(i + 1) % n]);
  return s;
}

PointPosition locate_point(const std::vector<Vec2>& hull, Vec2 p) {
  bool on_edge = false;
  const size_t n = hull.size();
  for (size_t i = 0; i < n; ++i) {
    Vec2 a = hull[i], b = hull[(i + 1) % n];
    i64 c = cross(b - a, p - a);
    if (c < 0) return PointPosition::Outside;
    if (c == 0) on_edge = true;
  }
  return on_edge ? PointPosition::Boundary : PointPosition::Interior;
}

std::vector<Vec2> interior_lattice_points(const std::vector<Vec2>& hull) {
  if (hull.size() < 3) return {};
  i64 xmin = hull[0].x, xmax = hull[0].x, ymin = hull[0].y, ymax = hull[0].y;
  for (Vec2 v : hull) {
    xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
  }
  std::vector<Vec2> out;
  for (i64 x = xmin; x <= xmax; ++x)
    for (i64 y = ymin; y <= ymax; ++y)
      if (locate_point(hull, {x, y}) == PointPosition::Interior)
        out.push_back({x, y});
  return out;
}

std::vector<std::vector<i64>> hermite_normal_form(std::vector<std::vector<i64>> rows) {
  if (rows.empty()) return rows;
  const size_t ncols = rows[0].size();
  size_t r = 0;  // next pivot row
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    // Euclidean elimination in column c over rows r..end.
    while (true) {
      size_t best = rows.size();
      for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() ||
            std::abs(rows[i][c]) < std::abs(rows[best][c]))
          best = i;
      }
      if (best == rows.size()) break;  // column clear below r
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        i64 q = rows[i][c] / rows[r][c];
        for (size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (size_t j = 0; j < ncols; ++j) rows[r][j] = -rows[r][j];
    // Reduce entries above the pivot into [0, pivot).
    for (size_t i = 0; i < r; ++i) {
      i64 q = rows[i][c] / rows[r][c];
      if (rows[i][c] - q * rows[r][c] < 0) --q;
      if (q != 0)
        for (size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace dimertoric
