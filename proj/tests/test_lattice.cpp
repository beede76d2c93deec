#include <doctest.h>

#include <algorithm>
#include <set>

#include "dimertoric/lattice.hpp"

using namespace dimertoric;

TEST_CASE("convex hull of a noisy square") {
  std::vector<Vec2> pts = {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1},
                           {1, 0}, {2, 1}, {0, 0}, {2, 2}};
  auto hull = convex_hull(pts);
  REQUIRE(hull.size() == 4);
  // Counterclockwise and closed under rotation of the start point.
  i64 area2 = twice_area(hull);
  CHECK(area2 == 8);
  std::set<Vec2> corners(hull.begin(), hull.end());
  CHECK(corners == std::set<Vec2>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

TEST_CASE("hull drops collinear points and handles triangles") {
  auto hull = convex_hull({{0, 0}, {3, 0}, {1, 0}, {0, 3}, {0, 1}, {1, 1}});
  CHECK(hull.size() == 3);
  CHECK(twice_area(hull) == 9);
}

TEST_CASE("boundary lattice points walk counterclockwise") {
  auto hull = convex_hull({{0, 0}, {2, 0}, {0, 2}});
  auto bd = boundary_lattice_points(hull);
  // Perimeter lattice count: gcd sums 2 + 2 + 2.
  CHECK(bd.size() == 6);
  CHECK(bd[0] == hull[0]);
  // Consecutive boundary points differ by a primitive step.
  for (size_t i = 0; i < bd.size(); ++i) {
    Vec2 d = bd[(i + 1) % bd.size()] - bd[i];
    CHECK(gcd_i64(d.x, d.y) == 1);
  }
  // Shoelace over the boundary walk reproduces the area (ccw check).
  i64 area2 = 0;
  for (size_t i = 0; i < bd.size(); ++i)
    area2 += cross(bd[i], bd[(i + 1) % bd.size()]);
  CHECK(area2 == twice_area(hull));
}

TEST_CASE("interior points and Pick consistency") {
  auto hull = convex_hull({{0, 0}, {3, 0}, {0, 3}});
  auto in = interior_lattice_points(hull);
  CHECK(in == std::vector<Vec2>{{1, 1}});
  // Pick: 2A = 2I + B - 2.
  CHECK(twice_area(hull) ==
        2 * (i64)in.size() + (i64)boundary_lattice_points(hull).size() - 2);

  // A bigger random-looking hull, same identity.
  auto h2 = convex_hull({{-2, -1}, {3, 0}, {2, 3}, {-1, 2}, {0, -2}});
  CHECK(twice_area(h2) ==
        2 * (i64)interior_lattice_points(h2).size() +
            (i64)boundary_lattice_points(h2).size() - 2);
}

TEST_CASE("locate_point classifies interior, boundary, outside") {
  auto hull = convex_hull({{0, 0}, {4, 0}, {0, 4}});
  CHECK(locate_point(hull, {1, 1}) == PointPosition::Interior);
  CHECK(locate_point(hull, {2, 0}) == PointPosition::Boundary);
  CHECK(locate_point(hull, {0, 0}) == PointPosition::Boundary);
  CHECK(locate_point(hull, {2, 2}) == PointPosition::Boundary);  // hypotenuse
  CHECK(locate_point(hull, {3, 2}) == PointPosition::Outside);
  CHECK(locate_point(hull, {-1, 0}) == PointPosition::Outside);
}

TEST_CASE("angle_less sorts rays counterclockwise from positive x-axis") {
  std::vector<Vec2> rays = {{0, -1}, {-1, 0}, {1, 1}, {1, 0}, {0, 1}, {-1, -1}};
  std::sort(rays.begin(), rays.end(), angle_less);
  CHECK(rays == std::vector<Vec2>{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
}

TEST_CASE("rotation by -90 degrees turns cross into dot") {
  std::vector<Vec2> sample = {{1, 0}, {0, 1}, {2, -3}, {-1, -4}, {5, 2}};
  for (Vec2 a : sample)
    for (Vec2 b : sample) CHECK(dot(a, rot_minus90(b)) == cross(a, b));
}

TEST_CASE("hermite normal form basics") {
  // Full-rank 2x2: lattice index preserved, pivots positive.
  auto h = hermite_normal_form({{2, 1}, {-2, 1}});
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] * h[1][1] - h[0][1] * h[1][0] == 4);
  CHECK(h[0][0] > 0);
  CHECK(h[1][1] > 0);
  CHECK(h[1][0] == 0);  // row echelon
  CHECK(h[0][1] >= 0);
  CHECK(h[0][1] < h[1][1]);  // reduced above the pivot

  // Dependent rows collapse.
  auto h2 = hermite_normal_form({{2, 4}, {1, 2}, {3, 6}});
  REQUIRE(h2.size() == 1);
  CHECK(h2[0] == std::vector<i64>{1, 2});

  // Zero matrix: no rows survive.
  CHECK(hermite_normal_form({{0, 0}, {0, 0}}).empty());

  // Invariance: HNF of (rows + integer combinations of rows) is HNF(rows).
  auto base = hermite_normal_form({{3, 1, 2}, {1, 4, 1}});
  auto mixed = hermite_normal_form({{3, 1, 2}, {4, 5, 3}, {-2, 3, -1}});
  CHECK(base == mixed);
}
