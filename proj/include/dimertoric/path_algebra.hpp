#pragma once

// The quiver path algebra modulo F-term relations, computed through the
// class invariant (endpoints, homology lift, reference-matching weight),
// plus weights of paths under perfect matchings and the finite-dimensional
// quotient by a matching ideal.

#include <map>
#include <vector>

#include "dimertoric/matchings.hpp"

namespace dimertoric {

struct Path {
  int source = 0;
  std::vector<int> arrows;  // traversal order: arrows[0] is walked first

  int target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrows[arrows.back()].target;
  }
};

// Builds a path from a traversal-order arrow list, checking composability.
Path make_path(const Quiver& q, int source, std::vector<int> arrows);

struct PathClass {
  int source = 0;
  int target = 0;
  Vec2 lift;           // spanning-tree normalized homology of the path
  i64 ref_weight = 0;  // weight under the reference matching

  auto operator<=>(const PathClass&) const = default;
};

// Matching-weight machinery shared by everything downstream.  Holds the
// enumerated matchings, their classes, and per-vertex signed tree weights.
class WeightTable {
 public:
  WeightTable(const Dimer& dimer);

  const Dimer& dimer() const { return *dimer_; }
  const std::vector<PerfectMatching>& matchings() const { return matchings_; }
  const PerfectMatching& reference() const { return matchings_[0]; }
  Vec2 matching_cls(int pm) const { return classes_[pm]; }
  bool edge_in(int pm, int edge) const { return in_matching_[pm][edge]; }

  // Signed weight of the spanning-tree walk from the root face to v.
  i64 tree_offset(int vertex, int pm) const { return tree_offset_[pm][vertex]; }

  i64 path_weight(const Path& p, int pm) const;
  PathClass path_class(const Path& p) const;
  PathClass extend(const PathClass& cls, int arrow) const;

  // Weight of any representative of cls under matching pm; exact, and
  // guaranteed nonnegative (checked).
  i64 class_weight(const PathClass& cls, int pm) const;

 private:
  const Dimer* dimer_;
  std::vector<PerfectMatching> matchings_;
  std::vector<Vec2> classes_;
  std::vector<std::vector<char>> in_matching_;
  std::vector<std::vector<i64>> tree_offset_;
};

enum class Equivalence { Yes, No, Inconclusive };

// Breadth-first closure of p under single F-term rewrites, truncated at
// `length_bound`.  Yes if q is reached; No if the class invariants differ or
// the closure is exhausted without truncation; Inconclusive only when the
// bound cut exploration short.
Equivalence fterm_equivalent(const WeightTable& wt, const Path& p,
                             const Path& q, int length_bound);

// All single-rewrite neighbors of a path (used by the closure and by tests).
std::vector<Path> fterm_neighbors(const Quiver& q, const Path& p);

struct HomDimTable {
  int vertices = 0;
  std::vector<std::vector<i64>> dim;  // [source][target]
  i64 total = 0;
};

// Entry (v,w) = number of distinct path classes v -> w in the quiver with
// the arrows of d0 removed.  Throws StructuralError with a witness cycle
// when that restricted quiver has a directed cycle (infinite dimensions).
HomDimTable quotient_hom_dims(const WeightTable& wt, const PerfectMatching& d0);

}  // namespace dimertoric
