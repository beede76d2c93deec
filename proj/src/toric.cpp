#include "dimertoric/toric.hpp"

#include <algorithm>
#include <stdexcept>

#include "dimertoric/dimer.hpp"  // InternalError

namespace dimertoric {

namespace {

// Number of cyclic runs of `false` in the sign vector (all-false counts 1).
int cyclic_minus_runs(const std::vector<bool>& s) {
  int runs = 0;
  const int n = (int)s.size();
  bool any_plus = false, any_minus = false;
  for (int i = 0; i < n; ++i) {
    if (s[i]) any_plus = true;
    else any_minus = true;
    if (!s[i] && s[(i + n - 1) % n]) ++runs;
  }
  if (!any_minus) return 0;
  if (!any_plus) return 1;
  return runs;
}

int linear_minus_runs(const std::vector<bool>& s) {
  int runs = 0;
  for (size_t i = 0; i < s.size(); ++i)
    if (!s[i] && (i == 0 || s[i - 1])) ++runs;
  return runs;
}

}  // namespace

StackyFan2 make_surface_fan(std::vector<Vec2> rays) {
  if (rays.size() < 3)
    throw std::invalid_argument("fan needs at least three rays");
  if (rays.size() > 20)
    throw std::invalid_argument("fan too large for pattern enumeration");
  for (Vec2 v : rays)
    if (v == Vec2{0, 0}) throw std::invalid_argument("zero ray generator");
  for (size_t i = 0; i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j)
      if (cross(rays[i], rays[j]) == 0 && dot(rays[i], rays[j]) > 0)
        throw std::invalid_argument("two rays share a direction");
  // Strict counterclockwise cyclic order: rotate to the angular minimum and
  // demand monotonicity.
  size_t start = 0;
  for (size_t i = 1; i < rays.size(); ++i)
    if (angle_less(rays[i], rays[start])) start = i;
  for (size_t k = 0; k + 1 < rays.size(); ++k) {
    Vec2 a = rays[(start + k) % rays.size()];
    Vec2 b = rays[(start + k + 1) % rays.size()];
    if (!angle_less(a, b))
      throw std::invalid_argument("rays are not in counterclockwise cyclic order");
  }
  if (locate_point(convex_hull(rays), {0, 0}) != PointPosition::Interior)
    throw std::invalid_argument("rays do not positively span the plane");
  StackyFan2 fan;
  fan.rays = std::move(rays);
  return fan;
}

StackyFan2 fan_from_polygon(const std::vector<Vec2>& hull, Vec2 origin) {
  if (locate_point(hull, origin) != PointPosition::Interior)
    throw std::invalid_argument("origin " + to_string(origin) +
                                " is not strictly interior to the polygon");
  std::vector<Vec2> rays;
  for (Vec2 p : boundary_lattice_points(hull)) rays.push_back(p - origin);
  return make_surface_fan(std::move(rays));
}

DivisorClass divisor_class_normal_form(const StackyFan2& fan, std::vector<i64> a) {
  if ((int)a.size() != fan.size())
    throw std::invalid_argument("coefficient count does not match ray count");
  DivisorClass cls;
  cls.coefficients = a;
  std::vector<std::vector<i64>> rows(2, std::vector<i64>(fan.size()));
  for (int i = 0; i < fan.size(); ++i) {
    rows[0][i] = fan.rays[i].x;
    rows[1][i] = fan.rays[i].y;
  }
  auto hnf = hermite_normal_form(std::move(rows));
  for (const auto& row : hnf) {
    size_t piv = 0;
    while (piv < row.size() && row[piv] == 0) ++piv;
    if (piv == row.size()) continue;
    i64 q = a[piv] / row[piv];
    if (a[piv] - q * row[piv] < 0) --q;
    for (size_t j = 0; j < a.size(); ++j) a[j] -= q * row[j];
  }
  cls.normal_form = std::move(a);
  return cls;
}

std::vector<Vec2> lattice_points_of_sign_pattern(const StackyFan2& fan,
                                                 const std::vector<i64>& a,
                                                 const std::vector<bool>& pattern) {
  LinearSystem sys;
  sys.dim = 2;
  for (int i = 0; i < fan.size(); ++i) {
    Vec2 v = fan.rays[i];
    if (pattern[i])
      sys.add({-v.x, -v.y}, a[i]);
    else
      sys.add({v.x, v.y}, -a[i] - 1);
  }
  if (!bounded_in_every_variable(sys))
    throw UnboundedRank("sign-pattern region is unbounded");
  std::vector<Vec2> out;
  for (const auto& p : integer_points(sys)) out.push_back({p[0], p[1]});
  return out;
}

CohomologyTable cohomology_surface(const StackyFan2& fan, const std::vector<i64>& a) {
  if ((int)a.size() != fan.size())
    throw std::invalid_argument("coefficient count does not match ray count");
  const int r = fan.size();
  CohomologyTable table;
  std::map<Vec3, i64> s0, s1, s2;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<bool> pattern(r);
    for (int i = 0; i < r; ++i) pattern[i] = mask & (1u << i);
    int runs = cyclic_minus_runs(pattern);
    bool all_plus = runs == 0;
    bool all_minus = (int)std::count(pattern.begin(), pattern.end(), false) == r;
    i64 weight = all_plus ? 1 : all_minus ? 1 : runs - 1;
    if (weight == 0) continue;
    std::vector<Vec2> pts;
    try {
      pts = lattice_points_of_sign_pattern(fan, a, pattern);
    } catch (const UnboundedRank&) {
      throw InternalError(
          "surface sign-pattern region unbounded; complete-fan invariant violated");
    }
    for (Vec2 m : pts) {
      Vec3 key{m.x, m.y, 0};
      if (all_plus) {
        table.h0 += 1;
        s0[key] += 1;
      } else if (all_minus) {
        table.h2 += 1;
        s2[key] += 1;
      } else {
        table.h1 += weight;
        s1[key] += weight;
      }
    }
  }
  table.h0_support.assign(s0.begin(), s0.end());
  table.h1_support.assign(s1.begin(), s1.end());
  table.h2_support.assign(s2.begin(), s2.end());
  return table;
}

CohomologyTable cohomology_canonical3(const StackyFan3& fan, i64 a0,
                                      const std::vector<i64>& a, i64 h0_truncation) {
  const StackyFan2& base = fan.base;
  if ((int)a.size() != base.size())
    throw std::invalid_argument("coefficient count does not match ray count");
  const int r = base.size();
  CohomologyTable table;
  table.h0_infinite = true;
  std::map<Vec3, i64> s1, s2;

  auto enumerate3 = [&](bool apex_plus, const std::vector<bool>& pattern) {
    LinearSystem sys;
    sys.dim = 3;
    if (apex_plus)
      sys.add({0, 0, -1}, a0);
    else
      sys.add({0, 0, 1}, -a0 - 1);
    for (int i = 0; i < r; ++i) {
      Vec2 v = base.rays[i];
      if (pattern[i])
        sys.add({-v.x, -v.y, -1}, a[i]);
      else
        sys.add({v.x, v.y, 1}, -a[i] - 1);
    }
    if (!bounded_in_every_variable(sys))
      throw UnboundedRank(
          "threefold sign-pattern region is unbounded (collinear boundary run "
          "with concave coefficients); the rank cannot be certified finite");
    std::vector<Vec3> out;
    for (const auto& p : integer_points(sys)) out.push_back({p[0], p[1], p[2]});
    return out;
  };

  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<bool> pattern(r);
    for (int i = 0; i < r; ++i) pattern[i] = mask & (1u << i);
    int runs = cyclic_minus_runs(pattern);
    bool all_minus = (int)std::count(pattern.begin(), pattern.end(), false) == r;
    if (all_minus) {
      for (Vec3 m : enumerate3(true, pattern)) {
        table.h2 += 1;
        s2[m] += 1;
      }
      continue;
    }
    if (runs >= 2) {
      for (Vec3 m : enumerate3(true, pattern)) {
        table.h1 += runs - 1;
        s1[m] += runs - 1;
      }
      table.h1_apex_minus +=
          (i64)(runs - 1) * (i64)enumerate3(false, pattern).size();
    }
  }

  // Truncated window of the (infinite) section support.
  for (i64 x = -h0_truncation; x <= h0_truncation; ++x)
    for (i64 y = -h0_truncation; y <= h0_truncation; ++y)
      for (i64 z = -h0_truncation; z <= h0_truncation; ++z) {
        if (a0 + z < 0) continue;
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
          ok = a[i] + dot({x, y}, base.rays[i]) + z >= 0;
        if (ok) {
          table.h0 += 1;
          table.h0_support.push_back({{x, y, z}, 1});
        }
      }
  table.h1_support.assign(s1.begin(), s1.end());
  table.h2_support.assign(s2.begin(), s2.end());
  return table;
}

bool condition_star(const StackyFan2& fan, const std::vector<i64>& a,
                    std::vector<StarWitness>* witnesses) {
  const int r = fan.size();
  // Corners: rays where the boundary polyline actually turns.
  std::vector<int> corner;
  for (int i = 0; i < r; ++i) {
    Vec2 prev = fan.rays[(i + r - 1) % r];
    Vec2 cur = fan.rays[i];
    Vec2 next = fan.rays[(i + 1) % r];
    if (cross(cur - prev, next - cur) != 0) corner.push_back(i);
  }
  bool ok = true;
  for (size_t c = 0; c < corner.size(); ++c) {
    int from = corner[c];
    int to = corner[(c + 1) % corner.size()];
    std::vector<int> run{from};
    for (int i = (from + 1) % r; i != to; i = (i + 1) % r) run.push_back(i);
    run.push_back(to);
    for (size_t p = 0; p < run.size(); ++p)
      for (size_t q = p + 2; q < run.size(); ++q) {
        if (a[run[p]] >= 0 || a[run[q]] >= 0) continue;
        for (size_t k = p + 1; k < q; ++k)
          if (a[run[k]] >= 0) {
            ok = false;
            if (witnesses)
              witnesses->push_back({run[p], run[q], run[k]});
          }
      }
  }
  return ok;
}

StripCohomology strip_cohomology(const std::vector<i64>& a) {
  const int n = (int)a.size();
  if (n == 0 || n > 20)
    throw std::invalid_argument("strip needs 1..20 coefficients");
  StripCohomology out;
  std::map<Vec2, i64> support;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> pattern(n);
    for (int i = 0; i < n; ++i) pattern[i] = mask & (1u << i);
    int runs = linear_minus_runs(pattern);
    if (runs < 2) continue;
    LinearSystem sys;
    sys.dim = 2;
    for (int i = 0; i < n; ++i) {
      if (pattern[i])
        sys.add({-(i64)i, -1}, a[i]);
      else
        sys.add({(i64)i, 1}, -a[i] - 1);
    }
    if (!bounded_in_every_variable(sys))
      throw InternalError("strip sign-pattern region unbounded");
    for (const auto& p : integer_points(sys)) {
      out.h1 += runs - 1;
      support[{p[0], p[1]}] += runs - 1;
    }
  }
  out.h1_support.assign(support.begin(), support.end());
  return out;
}

bool strip_acyclicity_predicate(const std::vector<i64>& a) {
  if (strip_cohomology(a).h1 != 0) return true;
  if (a.front() >= 0 || a.back() >= 0) return true;
  for (i64 c : a)
    if (c >= 0) return false;
  return true;
}

}  // namespace dimertoric
