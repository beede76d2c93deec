#include "dimertoric/polyhedron.hpp"

#include <stdexcept>

namespace dimertoric {

namespace {

i64 floor_div(i64 a, i64 b) {  // b > 0
  i64 q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}
i64 ceil_div(i64 a, i64 b) {  // b > 0
  return floor_div(a + b - 1, b);
}

// Eliminate variable `var` by Fourier–Motzkin; the result is the exact real
// projection onto the remaining coordinates.
LinearSystem eliminate(const LinearSystem& sys, int var) {
  LinearSystem out;
  out.dim = sys.dim - 1;
  auto drop = [&](const LinearSystem::Row& r) {
    LinearSystem::Row nr;
    nr.rhs = r.rhs;
    for (int j = 0; j < sys.dim; ++j)
      if (j != var) nr.coeffs.push_back(r.coeffs[j]);
    return nr;
  };
  std::vector<const LinearSystem::Row*> lower, upper;
  for (const auto& r : sys.rows) {
    i64 c = r.coeffs[var];
    if (c == 0)
      out.rows.push_back(drop(r));
    else if (c > 0)
      upper.push_back(&r);
    else
      lower.push_back(&r);
  }
  for (const auto* lo : lower) {
    for (const auto* up : upper) {
      i64 a = lo->coeffs[var];   // a < 0
      i64 c = up->coeffs[var];   // c > 0
      LinearSystem::Row nr;
      nr.rhs = c * lo->rhs + (-a) * up->rhs;
      for (int j = 0; j < sys.dim; ++j) {
        if (j == var) continue;
        nr.coeffs.push_back(c * lo->coeffs[j] + (-a) * up->coeffs[j]);
      }
      out.rows.push_back(std::move(nr));
    }
  }
  return out;
}

// Project down to variable `var` alone.
LinearSystem project_to(const LinearSystem& sys, int var) {
  LinearSystem cur = sys;
  int target = var;
  while (cur.dim > 1) {
    int victim = (target == cur.dim - 1) ? 0 : cur.dim - 1;
    cur = eliminate(cur, victim);
    if (victim < target) --target;
  }
  return cur;
}

struct Interval {
  bool feasible = true;
  bool has_lo = false, has_hi = false;
  i64 lo = 0, hi = 0;  // integer bounds when present
};

Interval interval_of(const LinearSystem& one_d) {
  Interval iv;
  for (const auto& r : one_d.rows) {
    i64 c = r.coeffs[0];
    if (c == 0) {
      if (r.rhs < 0) iv.feasible = false;
    } else if (c > 0) {
      i64 h = floor_div(r.rhs, c);
      if (!iv.has_hi || h < iv.hi) iv.hi = h, iv.has_hi = true;
    } else {
      i64 l = ceil_div(-r.rhs, -c);
      if (!iv.has_lo || l > iv.lo) iv.lo = l, iv.has_lo = true;
    }
  }
  if (iv.has_lo && iv.has_hi && iv.lo > iv.hi) iv.feasible = false;
  return iv;
}

LinearSystem substitute_first(const LinearSystem& sys, i64 value) {
  LinearSystem out;
  out.dim = sys.dim - 1;
  for (const auto& r : sys.rows) {
    LinearSystem::Row nr;
    nr.rhs = r.rhs - r.coeffs[0] * value;
    nr.coeffs.assign(r.coeffs.begin() + 1, r.coeffs.end());
    out.rows.push_back(std::move(nr));
  }
  return out;
}

void enumerate(const LinearSystem& sys, std::vector<i64>& prefix,
               std::vector<std::vector<i64>>& out) {
  if (sys.dim == 0) {
    for (const auto& r : sys.rows)
      if (r.rhs < 0) return;
    out.push_back(prefix);
    return;
  }
  Interval iv = interval_of(project_to(sys, 0));
  if (!iv.feasible) return;
  if (!iv.has_lo || !iv.has_hi)
    throw std::invalid_argument("integer_points: unbounded polyhedron");
  for (i64 t = iv.lo; t <= iv.hi; ++t) {
    prefix.push_back(t);
    enumerate(substitute_first(sys, t), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool bounded_in_variable(const LinearSystem& sys, int var) {
  Interval iv = interval_of(project_to(sys, var));
  if (!iv.feasible) return true;
  return iv.has_lo && iv.has_hi;
}

bool bounded_in_every_variable(const LinearSystem& sys) {
  for (int v = 0; v < sys.dim; ++v)
    if (!bounded_in_variable(sys, v)) return false;
  return true;
}

std::vector<std::vector<i64>> integer_points(const LinearSystem& sys) {
  if (sys.dim < 1 || sys.dim > 3)
    throw std::invalid_argument("integer_points: dimension must be 1..3");
  std::vector<std::vector<i64>> out;
  std::vector<i64> prefix;
  enumerate(sys, prefix, out);
  return out;
}

}  // namespace dimertoric
