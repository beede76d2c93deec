#pragma once

// Line-bundle collections on the surface stack attached to a dimer model
// and a chosen interior ("central") perfect matching, with the strong
// exceptionality verifier and the endomorphism-algebra cross-check.

#include <optional>

#include "dimertoric/path_algebra.hpp"
#include "dimertoric/toric.hpp"

namespace dimertoric {

struct Collection {
  StackyFan2 fan;
  Vec2 origin;                        // interior lattice point used as (0,0)
  int d0 = 0;                         // central matching id
  int base_vertex = 0;                // carries the trivial bundle
  std::vector<int> boundary_matching; // per ray: representative matching id
  std::vector<DivisorClass> bundles;  // per quiver vertex
};

// Coefficients a_i(v) = (signed weight of the tree walk base->v under the
// ray-i boundary matching) - (same under d0).  Throws StructuralError when
// d0's class is not the interior origin or a boundary point lacks a
// matching.  At boundary points carrying several matchings the smallest-id
// one is the representative.
Collection build_collection(const WeightTable& wt, const Polygon& poly,
                            const ClassificationReport& cls, int d0);

struct PairCohomology {
  int from = 0, to = 0;
  i64 h0 = 0, h1 = 0, h2 = 0;
  std::vector<Vec3> bad_support;  // characters carrying h1/h2, if any
};

struct VerificationReport {
  bool pass = true;
  std::vector<std::string> reasons;
  std::vector<int> order;          // topological order of the Hom digraph
  std::vector<i64> end_h0;         // per vertex; must be all 1
  std::vector<PairCohomology> pairs;  // all ordered pairs with from != to
};

VerificationReport verify_strong_exceptional(const Collection& coll);

struct CrossCheckReport {
  bool equal = true;
  HomDimTable path_side;
  std::vector<std::vector<i64>> toric_side;
  std::optional<std::pair<int, int>> first_mismatch;
};

// Entry-by-entry comparison of the path-algebra quotient dimensions with
// the lattice-point Hom dimensions of the collection.
CrossCheckReport cross_check_endomorphism_algebra(const WeightTable& wt,
                                                  const PerfectMatching& d0,
                                                  const Collection& coll);

// Rank consistency: bundle count == dimer face count == 2 * area(polygon).
bool fullness_rank_check(const Collection& coll, const Polygon& poly,
                         const Dimer& dimer);

}  // namespace dimertoric
