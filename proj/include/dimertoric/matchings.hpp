#pragma once

// Perfect matchings of a dimer model, their homology classes, and the
// characteristic lattice polygon with multiplicities.

#include <map>
#include <optional>
#include <vector>

#include "dimertoric/dimer.hpp"

namespace dimertoric {

struct PerfectMatching {
  int id = 0;
  std::vector<int> edges;  // internal edge indices, sorted by edge id string
};

// All perfect matchings, ordered lexicographically by their sorted edge-id
// string lists; ids are positions in this order.
std::vector<PerfectMatching> enumerate_matchings(const Dimer& dimer);

// Homology class in Z^2 of the superposition cycle pm - ref (pm edges walked
// white->black, ref edges black->white), rotated by -90 degrees to match the
// quiver-arrow convention.
Vec2 matching_class(const Dimer& dimer, const PerfectMatching& pm,
                    const PerfectMatching& ref);

enum class PointRole { Corner, Boundary, Interior };

struct Polygon {
  std::vector<PerfectMatching> matchings;
  std::vector<Vec2> classes;            // per matching id, relative to ref
  int reference = 0;                    // always 0: the lex-first matching
  std::vector<Vec2> hull;               // ccw vertices
  std::map<Vec2, int> multiplicity;     // occupied lattice points only
  std::map<Vec2, PointRole> role;       // every lattice point of the polygon
  i64 twice_area = 0;
};

// Throws StructuralError when no matching exists or all classes are collinear.
Polygon characteristic_polygon(const Dimer& dimer);

struct MatchingLabel {
  int matching = 0;
  Vec2 cls;
  PointRole role = PointRole::Corner;
};

struct ClassificationReport {
  std::vector<MatchingLabel> labels;
  Vec2 origin;                          // the chosen interior lattice point
  std::vector<int> central_candidates;  // matching ids with class == origin
  // Occupied-count per boundary lattice point of the hull, in ccw order.
  std::vector<std::pair<Vec2, int>> boundary_multiplicity;
  std::vector<std::string> warnings;
};

// Labels matchings by the position of their class and selects central
// candidates at `origin` (defaults to the unique occupied interior point).
// Throws StructuralError if no occupied interior point exists, if the origin
// is ambiguous without an explicit choice, or if a boundary lattice point of
// the polygon is unoccupied.  Boundary points occupied more than once are
// reported as warnings, not errors: repeated classes at a non-vertex
// boundary point do occur for consistent models (parallel zig-zag strips can
// be exchanged independently), and the downstream verifier decides whether
// the canonical representative works.
ClassificationReport classify_matchings(const Dimer& dimer, const Polygon& poly,
                                        std::optional<Vec2> origin = std::nullopt);

}  // namespace dimertoric
