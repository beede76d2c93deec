#pragma once

// Exact enumeration of integer points of low-dimensional rational polyhedra
// given by inequalities A m <= b.  Dimensions 1..3 only — that is all the
// cohomology routines need.  Enumeration is by integer Fourier–Motzkin
// projection; callers must first establish boundedness (the helper
// `bounded_in_every_variable` decides it exactly per variable).

#include <optional>
#include <vector>

#include "dimertoric/lattice.hpp"

namespace dimertoric {

struct LinearSystem {
  // Each row: coeffs.size() == dim, meaning coeffs . m <= rhs.
  struct Row {
    std::vector<i64> coeffs;
    i64 rhs = 0;
  };
  int dim = 0;
  std::vector<Row> rows;

  void add(std::vector<i64> coeffs, i64 rhs) {
    rows.push_back({std::move(coeffs), rhs});
  }
};

// True iff {m real : A m <= b} has finite extent in coordinate `var`.
// Decided by Fourier–Motzkin elimination of the other variables followed by
// a one-dimensional interval check.  Empty systems count as bounded.
bool bounded_in_variable(const LinearSystem& sys, int var);
bool bounded_in_every_variable(const LinearSystem& sys);

// All integer solutions of A m <= b, sorted lexicographically.
// Throws std::invalid_argument if some variable is unbounded.
std::vector<std::vector<i64>> integer_points(const LinearSystem& sys);

}  // namespace dimertoric
