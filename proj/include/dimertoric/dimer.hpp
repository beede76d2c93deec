#pragma once

// Bicolored graphs on the 2-torus, encoded as a ribbon graph (explicit
// counterclockwise edge order around every node) decorated with an integer
// homology shift per edge.  Compilation produces faces, the dual quiver,
// and zig-zag paths; no floating point anywhere.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimertoric/lattice.hpp"

namespace dimertoric {

// Thrown for malformed input: dangling endpoints, duplicate ids, broken
// rotation systems, bad documents.  CLI maps it to exit code 2.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal invariant that the library itself guarantees is
// observed to fail (a bug trap, not a user error).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct RawEdge {
  std::string id;
  std::string black;
  std::string white;
  Vec2 shift;  // lattice displacement from the black to the white endpoint

  bool operator==(const RawEdge&) const = default;
};

struct DimerModel {
  std::vector<std::string> blacks;
  std::vector<std::string> whites;
  std::vector<RawEdge> edges;
  // Incident edge ids, counterclockwise around the node on the torus.
  std::map<std::string, std::vector<std::string>> cyclic_order;
  // Optional planar positions in the fundamental square, as exact rationals
  // scaled by position_den; cosmetic (figures only).
  std::map<std::string, Vec2> position_num;
  i64 position_den = 1;

  bool operator==(const DimerModel&) const = default;
};

struct ValidationReport {
  bool valid = false;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  int faces = 0;  // meaningful when face tracing succeeded
};

// A dart is a directed edge side: 2*edge + 0 runs black->white,
// 2*edge + 1 runs white->black.
enum Dir : int { BW = 0, WB = 1 };
inline int dart_of(int edge, int dir) { return 2 * edge + dir; }
inline int edge_of_dart(int d) { return d / 2; }
inline int dir_of_dart(int d) { return d % 2; }

struct Face {
  int id = 0;
  std::vector<int> darts;  // counterclockwise boundary, canonical start
};

struct Arrow {
  int id = 0;       // equals the edge index
  int source = 0;   // face containing the white->black dart
  int target = 0;   // face containing the black->white dart
  Vec2 voltage;     // homology contribution of the arrow (tau)
  Vec2 lift;        // tree-normalized voltage (delta-hat); 0 on tree arrows
};

struct Quiver {
  std::vector<Arrow> arrows;
  int vertex_count = 0;
  // Relation paths per arrow, in traversal order (first arrow walked first);
  // both run from target(a) to source(a).
  std::vector<std::vector<int>> p_plus;
  std::vector<std::vector<int>> p_minus;
  std::vector<Vec2> vertex_lift;            // lambda, spanning-tree based
  std::vector<std::vector<int>> tree_walk;  // root->v, signed arrow ids
                                            //  (+(a+1) forward, -(a+1) back)
};

struct ZigzagPath {
  int id = 0;
  std::vector<int> darts;  // one period
  Vec2 homology;
};

struct ConsistencyReport {
  bool trivial_class_free = true;      // no zig-zag path of class (0,0)
  bool no_self_crossing = true;        // no repeated dart within one period
  bool no_parallel_share = true;       // parallel-class paths share no edge
  std::vector<std::string> failures;
  bool pass() const {
    return trivial_class_free && no_self_crossing && no_parallel_share;
  }
};

// Fully compiled model: validated combinatorics plus derived structures.
class Dimer {
 public:
  static ValidationReport validate(const DimerModel& model);
  // Throws StructuralError if validation fails.
  static Dimer compile(const DimerModel& model);

  const DimerModel& model() const { return model_; }
  int node_count() const { return (int)node_names_.size(); }
  int black_count() const { return (int)model_.blacks.size(); }
  int edge_count() const { return (int)model_.edges.size(); }
  bool is_black(int node) const { return node < black_count(); }
  const std::string& node_name(int node) const { return node_names_[node]; }
  int node_index(const std::string& name) const;
  int edge_index(const std::string& id) const;
  const std::string& edge_id(int e) const { return model_.edges[e].id; }
  Vec2 shift(int e) const { return model_.edges[e].shift; }
  int black_end(int e) const { return edge_black_[e]; }
  int white_end(int e) const { return edge_white_[e]; }
  // Incident edges counterclockwise around the node.
  const std::vector<int>& star(int node) const { return star_[node]; }

  int dart_tail(int d) const;
  int dart_head(int d) const;
  // Lattice displacement from tail lift to head lift.
  Vec2 dart_delta(int d) const;
  // Face tracing successor: exits head(d) along the counterclockwise
  // predecessor of edge(d) in the star of head(d).
  int next_dart_in_face(int d) const;

  const std::vector<Face>& faces() const { return faces_; }
  int face_of_dart(int d) const { return dart_face_[d]; }
  // Offset of the tail of d within its face's canonical planar lift.
  Vec2 dart_offset(int d) const { return dart_offset_[d]; }

  const Quiver& quiver() const { return quiver_; }
  const std::vector<ZigzagPath>& zigzags() const { return zigzags_; }
  ConsistencyReport consistency() const;

 private:
  Dimer() = default;
  DimerModel model_;
  std::vector<std::string> node_names_;  // blacks then whites
  std::map<std::string, int> node_index_;
  std::map<std::string, int> edge_index_;
  std::vector<int> edge_black_, edge_white_;
  std::vector<std::vector<int>> star_;
  std::vector<Face> faces_;
  std::vector<int> dart_face_;
  std::vector<Vec2> dart_offset_;
  Quiver quiver_;
  std::vector<ZigzagPath> zigzags_;

  void build_faces();
  void build_quiver();
  void build_zigzags();
};

}  // namespace dimertoric
