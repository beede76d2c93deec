#pragma once

// Small cycles, the superpotential, the cyclic-division criterion for its
// two-sided ideal, truncated dimensions of the quotient, and the diagram of
// curved cyclic quivers attached to edges and nodes.

#include "dimertoric/path_algebra.hpp"

namespace dimertoric {

struct SmallCycle {
  int vertex = 0;
  PathClass cls;
};

// The cycle at v that walks an outgoing arrow and returns along the white
// complement; its class does not depend on the chosen arrow (checked over
// all of them; violation throws StructuralError).
SmallCycle small_cycle(const WeightTable& wt, int vertex);

// A concrete representative: the minimal-id outgoing arrow followed by its
// white-complement relation path.
Path small_cycle_path(const WeightTable& wt, int vertex);

struct CentralityReport {
  bool pass = true;
  std::vector<std::string> witnesses;
};

// For every arrow a: walking a then the small cycle at its target has the
// same class as walking the small cycle at its source then a.
CentralityReport superpotential_centrality(const WeightTable& wt);

// Class-level membership in the two-sided ideal of the total small-cycle
// sum: weight at least 1 under every perfect matching.
bool omega_divisible(const WeightTable& wt, const PathClass& cls);

struct TruncatedDim {
  i64 count = 0;       // distinct non-divisible classes with |lift|_inf bound
  bool stabilized = false;
  int depth = 0;       // path length reached by the search
};

// Number of distinct path classes source->target that are not divisible by
// the small-cycle sum and have |lift|_inf <= lift_bound.  Breadth-first over
// classes by path length; stops after `window` lengths without a new
// qualifying class, or at max_length (then stabilized=false).
TruncatedDim a0_dim_truncated(const WeightTable& wt, int source, int target,
                              i64 lift_bound, int max_length = 24,
                              int window = 6);

// --- curved cyclic-quiver diagram -----------------------------------------

struct CurvedNodeObject {
  std::string node;
  std::vector<int> edges;  // cyclic order used by the object: clockwise for
                           // black nodes, counterclockwise for white ones
};

struct CurvedMorphism {
  int edge = 0;
  std::string node;
  int position = 0;             // index of the edge in the node's cycle
  std::vector<int> p_image;     // image of p_e: edges in application order
  bool composes = true;         // endpoints match through the vertex map
  bool curvature_matches = true;  // image of W_e = the two terms of W_n
                                  // whose first/last applied arrow is a_e
};

struct CurvedDiagram {
  std::vector<int> edge_objects;  // one two-cycle object per edge
  std::vector<CurvedNodeObject> node_objects;
  std::vector<CurvedMorphism> morphisms;
  bool all_checks_pass = true;
};

CurvedDiagram curved_diagram(const Dimer& dimer);

}  // namespace dimertoric
