#pragma once

// Exact integer planar lattice primitives shared by the whole toolkit.
// Everything is int64; magnitudes stay tiny (desk-scale models), so no
// overflow guards beyond the ones in the rational helpers.

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimertoric {

using i64 = std::int64_t;

struct Vec2 {
  i64 x = 0;
  i64 y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(Vec2 b) { x += b.x; y += b.y; return *this; }
  Vec2& operator-=(Vec2 b) { x -= b.x; y -= b.y; return *this; }
  friend Vec2 operator*(i64 k, Vec2 a) { return {k * a.x, k * a.y}; }
  auto operator<=>(const Vec2&) const = default;
};

inline i64 dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline i64 cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

// Rotation by -90 degrees: converts the intersection pairing on homology
// classes into the ordinary dot product (the quiver-arrow convention).
inline Vec2 rot_minus90(Vec2 v) { return {v.y, -v.x}; }

struct Vec3 {
  i64 x = 0;
  i64 y = 0;
  i64 z = 0;
  auto operator<=>(const Vec3&) const = default;
};

inline i64 gcd_i64(i64 a, i64 b) { return std::gcd(std::abs(a), std::abs(b)); }

inline std::string to_string(Vec2 v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}
inline std::string to_string(Vec3 v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + "," +
         std::to_string(v.z) + ")";
}

// Angular order counterclockwise starting at the positive x-axis.
// Total order on nonzero vectors of distinct directions.
inline int half_plane(Vec2 v) {
  return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}
inline bool angle_less(Vec2 a, Vec2 b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  i64 c = cross(a, b);
  if (c != 0) return c > 0;
  // Same direction: shorter first (tie-break, not used by validated fans).
  return dot(a, a) < dot(b, b);
}

// Convex hull (Andrew monotone chain), vertices counterclockwise,
// collinear non-vertex points dropped.  Input may contain duplicates.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

// All lattice points on the boundary of the hull, counterclockwise,
// starting at hull vertex 0.  Hull must be 2-dimensional.
std::vector<Vec2> boundary_lattice_points(const std::vector<Vec2>& hull);

// All lattice points strictly inside the hull, sorted lexicographically.
std::vector<Vec2> interior_lattice_points(const std::vector<Vec2>& hull);

// Twice the Euclidean area (shoelace), nonnegative for ccw hulls.
i64 twice_area(const std::vector<Vec2>& hull);

// Position of a point relative to a ccw 2-dimensional hull.
enum class PointPosition { Interior, Boundary, Outside };
PointPosition locate_point(const std::vector<Vec2>& hull, Vec2 p);

// Row-style Hermite normal form of a small integer matrix.  Rows span the
// same lattice as the input rows; pivots positive, zero rows dropped.
std::vector<std::vector<i64>> hermite_normal_form(std::vector<std::vector<i64>> rows);

}  // namespace dimertoric
