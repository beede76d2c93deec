#pragma once

// Exact toric cohomology of line bundles through cyclic sign sequences.
// Surface case: complete stacky fan in Z^2 whose ray generators are the
// boundary lattice points of a polygon with the origin inside.  Threefold
// case: the cone fan with apex ray (0,0,1) over that polygon placed at
// height one.  Every rank is an exact integer obtained by enumerating the
// lattice points of sign-pattern polyhedra.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimertoric/lattice.hpp"
#include "dimertoric/polyhedron.hpp"

namespace dimertoric {

struct StackyFan2 {
  std::vector<Vec2> rays;  // strictly counterclockwise, positively spanning

  int size() const { return (int)rays.size(); }
};

// Validates and builds the fan: rays must be nonzero, in strictly
// counterclockwise cyclic order, and positively span the plane (equivalently
// the origin is interior to their hull).  Throws std::invalid_argument.
StackyFan2 make_surface_fan(std::vector<Vec2> rays);

// Rays := boundary lattice points of the hull translated by -origin,
// counterclockwise.  Throws if origin is not strictly interior.
StackyFan2 fan_from_polygon(const std::vector<Vec2>& hull, Vec2 origin);

struct StackyFan3 {
  StackyFan2 base;  // apex ray (0,0,1) is implicit; others are (v, 1)
};

struct DivisorClass {
  std::vector<i64> coefficients;
  std::vector<i64> normal_form;  // canonical coset representative

  bool operator==(const DivisorClass&) const = default;
};

// Canonical representative of (a_i) modulo the character sublattice
// {(<m, v_i>)_i : m in Z^2}, via Hermite reduction at the pivot columns.
DivisorClass divisor_class_normal_form(const StackyFan2& fan, std::vector<i64> a);

struct CohomologyTable {
  i64 h0 = 0, h1 = 0, h2 = 0;
  bool h0_infinite = false;  // threefold sections form an infinite family
  // Characters with positive rank, sorted; h0 support is truncated (and
  // marked incomplete) when h0_infinite.
  std::vector<std::pair<Vec3, i64>> h0_support;
  std::vector<std::pair<Vec3, i64>> h1_support;
  std::vector<std::pair<Vec3, i64>> h2_support;
  // Threefold only: total over characters whose apex entry is negative and
  // whose cyclic part is mixed (the complementary interval count); finite,
  // and matched by h1 of the coefficient-wise dual divisor.
  i64 h1_apex_minus = 0;
};

// Thrown when a requested rank is genuinely infinite: some contributing
// sign-pattern region is unbounded.  Cannot happen for the surface; on the
// threefold it requires a collinear boundary run with concave coefficients.
struct UnboundedRank : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Surface cohomology.  For each character m the cyclic signs of
// a_i + <m, v_i> contribute: all plus -> h0, all minus -> h2, otherwise
// (#minus-intervals - 1) to h1.  Characters are found exactly.
CohomologyTable cohomology_surface(const StackyFan2& fan, const std::vector<i64>& a);

// Threefold cohomology for coefficients (a0; a1..ar) on the cone fan.
// Twisted signs at character (m, m3): apex a0 + m3, cyclic
// a_i + <m, v_i> + m3.  h0 is infinite (inequality description retained via
// truncated support with |m|_inf <= h0_truncation); h1 counts
// (#minus-intervals - 1) over apex-plus mixed patterns; h2 counts
// (+; all minus) patterns.
CohomologyTable cohomology_canonical3(const StackyFan3& fan, i64 a0,
                                      const std::vector<i64>& a,
                                      i64 h0_truncation = 2);

// All characters whose twisted signs realize `pattern` (true = nonnegative).
// Surface version; throws UnboundedRank if the region is unbounded.
std::vector<Vec2> lattice_points_of_sign_pattern(const StackyFan2& fan,
                                                 const std::vector<i64>& a,
                                                 const std::vector<bool>& pattern);

struct StarWitness {
  int run_first = 0;   // ray indices into the fan, endpoints of the segment
  int run_last = 0;
  int violator = 0;    // intermediate ray with nonnegative coefficient
};

// Condition on collinear boundary runs: whenever the two endpoints of a
// maximal collinear run of rays carry negative coefficients, every
// intermediate ray must as well.  Returns witnesses of failure.
bool condition_star(const StackyFan2& fan, const std::vector<i64>& a,
                    std::vector<StarWitness>* witnesses = nullptr);

struct StripCohomology {
  i64 h1 = 0;
  std::vector<std::pair<Vec2, i64>> h1_support;
  bool acyclic() const { return h1 == 0; }
};

// Half-plane strip with rays (i, 1), i = 0..n, coefficients a_0..a_n.
// Linear (non-cyclic) sign sequences; h1 per character is the number of
// minus-runs minus one (when positive), h2 is identically zero.
StripCohomology strip_cohomology(const std::vector<i64>& a);

// The acyclicity consequence for the strip: if h1 vanishes for every
// character and both end coefficients are negative, all coefficients are.
bool strip_acyclicity_predicate(const std::vector<i64>& a);

}  // namespace dimertoric
