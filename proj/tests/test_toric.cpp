#include <doctest.h>

#include <random>

#include "dimertoric/toric.hpp"

using namespace dimertoric;

namespace {

struct OracleCounts {
  i64 h0 = 0, h1 = 0, h2 = 0;
  bool operator==(const OracleCounts&) const = default;
};

// Independent surface-cohomology oracle: scan characters in a box and read
// the cyclic sign sequences directly.
OracleCounts sign_scan(const StackyFan2& fan, const std::vector<i64>& a,
                       i64 radius) {
  OracleCounts out;
  const int r = fan.size();
  for (i64 mx = -radius; mx <= radius; ++mx)
    for (i64 my = -radius; my <= radius; ++my) {
      int minus_runs = 0, minus = 0;
      for (int i = 0; i < r; ++i) {
        bool neg = a[i] + dot({mx, my}, fan.rays[i]) < 0;
        bool prev_neg =
            a[(i + r - 1) % r] + dot({mx, my}, fan.rays[(i + r - 1) % r]) < 0;
        if (neg) {
          ++minus;
          if (!prev_neg) ++minus_runs;
        }
      }
      if (minus == 0)
        ++out.h0;
      else if (minus == r)
        ++out.h2;
      else
        out.h1 += minus_runs - 1;
    }
  return out;
}

// The box is large enough when growing it changes nothing.
OracleCounts certified_scan(const StackyFan2& fan, const std::vector<i64>& a) {
  OracleCounts c1 = sign_scan(fan, a, 18);
  OracleCounts c2 = sign_scan(fan, a, 24);
  REQUIRE(c1 == c2);
  return c1;
}

const std::vector<StackyFan2>& bundled_fans() {
  static std::vector<StackyFan2> fans = {
      make_surface_fan({{-2, -1}, {1, 0}, {1, 1}}),            // dp0
      make_surface_fan({{-1, 0}, {0, -1}, {1, 0}, {0, 1}}),    // f0
      make_surface_fan({{-1, -1}, {0, -1}, {1, 0}, {0, 1}}),   // f1
      make_surface_fan({{-2, 1}, {-1, 0}, {0, -1}, {1, 0}}),   // wf1
  };
  return fans;
}

}  // namespace

TEST_CASE("fan construction validates its input") {
  CHECK_THROWS_AS(make_surface_fan({}), std::invalid_argument);
  CHECK_THROWS_AS(make_surface_fan({{1, 0}, {0, 0}, {0, 1}}),
                  std::invalid_argument);
  // Not counterclockwise.
  CHECK_THROWS_AS(make_surface_fan({{1, 0}, {0, 1}, {1, 1}}),
                  std::invalid_argument);
  // Does not positively span the plane.
  CHECK_THROWS_AS(make_surface_fan({{1, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_surface_fan({{1, 0}, {1, 1}, {0, 1}}),
                  std::invalid_argument);
  // A valid fan may start anywhere in the cycle.
  CHECK(make_surface_fan({{0, 1}, {-1, -1}, {1, 0}}).size() == 3);
}

TEST_CASE("fan from polygon re-centers boundary points at the origin") {
  std::vector<Vec2> hull = {{0, 0}, {0, 1}, {-3, -1}};
  auto fan = fan_from_polygon(convex_hull(hull), {-1, 0});
  CHECK(fan.rays == std::vector<Vec2>{{-2, -1}, {1, 0}, {1, 1}});
  CHECK_THROWS_AS(fan_from_polygon(convex_hull(hull), {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("projective plane section counts") {
  StackyFan2 p2 = make_surface_fan({{1, 0}, {0, 1}, {-1, -1}});
  for (i64 d = 0; d <= 6; ++d) {
    auto t = cohomology_surface(p2, {0, 0, d});
    CHECK(t.h0 == (d + 1) * (d + 2) / 2);
    CHECK(t.h1 == 0);
    CHECK(t.h2 == 0);
    CHECK((i64)t.h0_support.size() == t.h0);
  }
  // O(-1), O(-2) are acyclic; the canonical O(-3) has a single h2.
  for (i64 d : {-1, -2}) {
    auto t = cohomology_surface(p2, {0, 0, d});
    CHECK(t.h0 + t.h1 + t.h2 == 0);
  }
  auto k = cohomology_surface(p2, {-1, -1, -1});
  CHECK(k.h0 == 0);
  CHECK(k.h1 == 0);
  CHECK(k.h2 == 1);
}

TEST_CASE("surface cohomology agrees with the sign-scan oracle") {
  std::mt19937 rng(20260823);
  for (const auto& fan : bundled_fans()) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<i64> a(fan.size());
      for (auto& c : a) c = (i64)(rng() % 7) - 3;
      CAPTURE(fan.rays[0].x);
      CAPTURE(a[0]);
      auto t = cohomology_surface(fan, a);
      OracleCounts want = certified_scan(fan, a);
      CHECK(t.h0 == want.h0);
      CHECK(t.h1 == want.h1);
      CHECK(t.h2 == want.h2);
      // Support lists carry exactly the advertised totals.
      i64 s0 = 0, s1 = 0, s2 = 0;
      for (auto& [m, r] : t.h0_support) s0 += r;
      for (auto& [m, r] : t.h1_support) s1 += r;
      for (auto& [m, r] : t.h2_support) s2 += r;
      CHECK(s0 == t.h0);
      CHECK(s1 == t.h1);
      CHECK(s2 == t.h2);
    }
  }
}

TEST_CASE("Serre duality pairs each divisor with its coefficient dual") {
  std::mt19937 rng(99);
  for (const auto& fan : bundled_fans()) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<i64> a(fan.size()), dual(fan.size());
      for (int i = 0; i < fan.size(); ++i) {
        a[i] = (i64)(rng() % 9) - 4;
        dual[i] = -a[i] - 1;
      }
      auto t = cohomology_surface(fan, a);
      auto td = cohomology_surface(fan, dual);
      CHECK(t.h0 == td.h2);
      CHECK(t.h1 == td.h1);
      CHECK(t.h2 == td.h0);
    }
  }
}

TEST_CASE("sign-pattern enumeration: bounded regions and the unbounded throw") {
  StackyFan2 f0 = make_surface_fan({{-1, 0}, {0, -1}, {1, 0}, {0, 1}});
  auto pts = lattice_points_of_sign_pattern(f0, {1, 1, 1, 1},
                                            {true, true, true, true});
  CHECK(pts.size() == 9);  // the square [-1,1]^2
  for (Vec2 m : pts) {
    CHECK(std::abs(m.x) <= 1);
    CHECK(std::abs(m.y) <= 1);
  }
  // A single minus interval leaves the region open in one direction.
  CHECK_THROWS_AS(lattice_points_of_sign_pattern(
                      f0, {1, 1, 1, 1}, {true, true, true, false}),
                  UnboundedRank);
}

TEST_CASE("divisor class normal form is canonical") {
  std::mt19937 rng(5);
  for (const auto& fan : bundled_fans()) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<i64> a(fan.size());
      for (auto& c : a) c = (i64)(rng() % 9) - 4;
      DivisorClass d = divisor_class_normal_form(fan, a);
      CHECK(d.coefficients == a);
      // Idempotent.
      CHECK(divisor_class_normal_form(fan, d.normal_form).normal_form ==
            d.normal_form);
      // Invariant under shifting by any character.
      Vec2 m{(i64)(rng() % 5) - 2, (i64)(rng() % 5) - 2};
      std::vector<i64> shifted(fan.size());
      for (int i = 0; i < fan.size(); ++i)
        shifted[i] = a[i] + dot(m, fan.rays[i]);
      CHECK(divisor_class_normal_form(fan, shifted).normal_form ==
            d.normal_form);
      // The reduction itself is realized by an integer character.
      bool found = false;
      for (i64 mx = -12; mx <= 12 && !found; ++mx)
        for (i64 my = -12; my <= 12 && !found; ++my) {
          bool all = true;
          for (int i = 0; i < fan.size(); ++i)
            all = all &&
                  a[i] - d.normal_form[i] == dot({mx, my}, fan.rays[i]);
          found = all;
        }
      CHECK(found);
      // Equal normal forms mean cohomology cannot tell the divisors apart.
      auto t = cohomology_surface(fan, a);
      auto tn = cohomology_surface(fan, d.normal_form);
      CHECK(t.h0 == tn.h0);
      CHECK(t.h1 == tn.h1);
      CHECK(t.h2 == tn.h2);
    }
  }
}

TEST_CASE("threefold cohomology: frozen values") {
  StackyFan3 dp0{make_surface_fan({{-2, -1}, {1, 0}, {1, 1}})};
  StackyFan3 f0{make_surface_fan({{-1, 0}, {0, -1}, {1, 0}, {0, 1}})};

  auto t = cohomology_canonical3(dp0, 0, {0, 0, 0});
  CHECK(t.h0_infinite);  // sections pile up along the cone direction
  CHECK(t.h1 == 0);
  CHECK(t.h2 == 0);
  CHECK(t.h1_apex_minus == 0);
  CHECK_FALSE(t.h0_support.empty());

  auto t2 = cohomology_canonical3(dp0, 1, {2, 0, -2});
  CHECK(t2.h1 == 0);
  CHECK(t2.h2 == 1);

  auto t3 = cohomology_canonical3(f0, -3, {-1, -2, -1, -2});
  CHECK(t3.h1 == 0);
  CHECK(t3.h2 == 0);
  CHECK(t3.h1_apex_minus == 1);
}

TEST_CASE("threefold h1 at negative apex matches the dual h1") {
  StackyFan3 dp0{make_surface_fan({{-2, -1}, {1, 0}, {1, 1}})};
  StackyFan3 f0{make_surface_fan({{-1, 0}, {0, -1}, {1, 0}, {0, 1}})};
  struct Case {
    const StackyFan3* fan;
    i64 a0;
    std::vector<i64> a;
  };
  for (const Case& c : std::initializer_list<Case>{
           {&dp0, 0, {0, 0, 0}},
           {&dp0, 1, {2, 0, -2}},
           {&dp0, -2, {1, 0, 1}},
           {&f0, 0, {1, 0, -1, 2}},
           {&f0, -1, {0, 0, 1, 1}},
           {&f0, -3, {-1, -2, -1, -2}}}) {
    auto t = cohomology_canonical3(*c.fan, c.a0, c.a);
    std::vector<i64> dual;
    for (i64 v : c.a) dual.push_back(-v - 1);
    auto td = cohomology_canonical3(*c.fan, -c.a0 - 1, dual);
    CHECK(t.h1_apex_minus == td.h1);
    CHECK(td.h1_apex_minus == t.h1);
  }
}

TEST_CASE("collinear run with concave coefficients is honestly unbounded") {
  StackyFan2 wf1 = make_surface_fan({{-2, 1}, {-1, 0}, {0, -1}, {1, 0}});
  // Rays 0..2 lie on x + y = -1; endpoints negative, middle nonnegative.
  std::vector<StarWitness> w;
  CHECK_FALSE(condition_star(wf1, {-1, 0, -1, 0}, &w));
  REQUIRE(w.size() == 1);
  CHECK(w[0].run_first == 0);
  CHECK(w[0].run_last == 2);
  CHECK(w[0].violator == 1);
  CHECK_THROWS_AS(
      cohomology_canonical3(StackyFan3{wf1}, 0, {-1, 0, -1, 0}),
      UnboundedRank);
  // Monotone coefficients along the run are fine.
  CHECK(condition_star(wf1, {-1, -1, -1, 0}, nullptr));
  CHECK(condition_star(wf1, {0, 5, 0, 0}, nullptr));
  auto ok = cohomology_canonical3(StackyFan3{wf1}, -1, {-1, -1, -1, 0});
  CHECK(ok.h1 == 0);
  CHECK(ok.h2 == 0);
  // Fans without collinear runs satisfy the condition vacuously.
  StackyFan2 dp0 = make_surface_fan({{-2, -1}, {1, 0}, {1, 1}});
  CHECK(condition_star(dp0, {-5, 3, -7}, nullptr));
}

TEST_CASE("strip cohomology and its acyclicity consequence") {
  CHECK(strip_cohomology({-1, 0, -1}).h1 == 1);
  CHECK(strip_cohomology({-1, -1, -1}).acyclic());
  CHECK(strip_cohomology({-2, 1, -2}).h1 == 9);
  CHECK(strip_cohomology({0, -3, 0}).acyclic());
  CHECK(strip_cohomology({-1, 2, -5, 1, -1}).h1 == 41);

  // Brute force over short strips: the predicate never fails.
  for (int n = 2; n <= 4; ++n) {
    std::vector<i64> a(n, -2);
    while (true) {
      CHECK(strip_acyclicity_predicate(a));
      // Cross-check the h1 support totals while we are here.
      auto s = strip_cohomology(a);
      i64 sum = 0;
      for (auto& [m, r] : s.h1_support) sum += r;
      CHECK(sum == s.h1);
      int i = n - 1;
      while (i >= 0 && a[i] == 2) a[i--] = -2;
      if (i < 0) break;
      ++a[i];
    }
  }
}
