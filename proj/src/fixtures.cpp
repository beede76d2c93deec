#include "dimertoric/fixtures.hpp"

#include "dimertoric/io.hpp"

namespace dimertoric {

namespace {

// One hexagonal tile: the three-loop quiver on a single face.
const std::string kC3 = R"({
  "blacks": ["b0"],
  "whites": ["w0"],
  "edges": [
    {"id": "e1", "black": "b0", "white": "w0", "shift": [0, 0]},
    {"id": "e2", "black": "b0", "white": "w0", "shift": [1, 0]},
    {"id": "e3", "black": "b0", "white": "w0", "shift": [0, 1]}
  ],
  "cyclic_order": {
    "b0": ["e3", "e1", "e2"],
    "w0": ["e1", "e2", "e3"]
  },
  "positions": {
    "den": 2,
    "nodes": {
      "b0": [1, 1],
      "w0": [0, 0]
    }
  }
})";

// Hexagonal tiling with three faces; the polygon is the unimodular triangle
// of the projective plane.
const std::string kDp0 = R"({
  "blacks": ["b0", "b1", "b2"],
  "whites": ["w0", "w1", "w2"],
  "edges": [
    {"id": "e1_0", "black": "b0", "white": "w0", "shift": [0, 0]},
    {"id": "e1_1", "black": "b1", "white": "w1", "shift": [0, 0]},
    {"id": "e1_2", "black": "b2", "white": "w2", "shift": [0, 0]},
    {"id": "e2_0", "black": "b0", "white": "w1", "shift": [0, 0]},
    {"id": "e2_1", "black": "b1", "white": "w2", "shift": [0, 0]},
    {"id": "e2_2", "black": "b2", "white": "w0", "shift": [1, 0]},
    {"id": "e3_0", "black": "b0", "white": "w2", "shift": [-1, 1]},
    {"id": "e3_1", "black": "b1", "white": "w0", "shift": [0, 1]},
    {"id": "e3_2", "black": "b2", "white": "w1", "shift": [0, 1]}
  ],
  "cyclic_order": {
    "b0": ["e3_0", "e1_0", "e2_0"],
    "b1": ["e3_1", "e1_1", "e2_1"],
    "b2": ["e3_2", "e1_2", "e2_2"],
    "w0": ["e1_0", "e2_2", "e3_1"],
    "w1": ["e1_1", "e2_0", "e3_2"],
    "w2": ["e1_2", "e2_1", "e3_0"]
  },
  "positions": {
    "den": 6,
    "nodes": {
      "b0": [0, 3],
      "b1": [2, 3],
      "b2": [4, 3],
      "w0": [0, 0],
      "w1": [2, 0],
      "w2": [4, 0]
    }
  }
})";

// Square tiling with four faces; the polygon is the unit square of the
// product of two projective lines.
const std::string kF0 = R"({
  "blacks": ["b1", "b2"],
  "whites": ["w1", "w2"],
  "edges": [
    {"id": "s1", "black": "b1", "white": "w1", "shift": [0, 0]},
    {"id": "s2", "black": "b1", "white": "w1", "shift": [1, 0]},
    {"id": "s3", "black": "b1", "white": "w2", "shift": [0, 0]},
    {"id": "s4", "black": "b1", "white": "w2", "shift": [0, -1]},
    {"id": "s5", "black": "b2", "white": "w2", "shift": [0, 0]},
    {"id": "s6", "black": "b2", "white": "w2", "shift": [-1, 0]},
    {"id": "s7", "black": "b2", "white": "w1", "shift": [0, 1]},
    {"id": "s8", "black": "b2", "white": "w1", "shift": [0, 0]}
  ],
  "cyclic_order": {
    "b1": ["s2", "s3", "s1", "s4"],
    "b2": ["s5", "s7", "s6", "s8"],
    "w1": ["s1", "s8", "s2", "s7"],
    "w2": ["s6", "s4", "s5", "s3"]
  },
  "positions": {
    "den": 2,
    "nodes": {
      "b1": [1, 0],
      "b2": [0, 1],
      "w1": [0, 0],
      "w2": [1, 1]
    }
  }
})";

// Mixed tiling with four faces (two hexagons, two quadrilaterals) whose
// polygon is the blowup-of-the-plane quadrilateral: four
// corners, one interior point, and no antiparallel sides.  Found by
// exhaustive search over 3+3-node, 10-edge rotation systems; carries no
// positions, so figure rendering falls back to the seeded grid layout.
const std::string kF1 = R"({
  "blacks": ["b0", "b1", "b2"],
  "whites": ["w0", "w1", "w2"],
  "edges": [
    {"id": "e0", "black": "b0", "white": "w0", "shift": [0, 0]},
    {"id": "e1", "black": "b0", "white": "w0", "shift": [-1, 0]},
    {"id": "e2", "black": "b0", "white": "w1", "shift": [0, 0]},
    {"id": "e3", "black": "b0", "white": "w2", "shift": [0, 0]},
    {"id": "e4", "black": "b1", "white": "w0", "shift": [0, 0]},
    {"id": "e5", "black": "b1", "white": "w1", "shift": [1, -1]},
    {"id": "e6", "black": "b1", "white": "w2", "shift": [1, 0]},
    {"id": "e7", "black": "b2", "white": "w0", "shift": [0, 0]},
    {"id": "e8", "black": "b2", "white": "w1", "shift": [1, 0]},
    {"id": "e9", "black": "b2", "white": "w2", "shift": [0, 1]}
  ],
  "cyclic_order": {
    "b0": ["e0", "e2", "e1", "e3"],
    "b1": ["e4", "e5", "e6"],
    "b2": ["e7", "e8", "e9"],
    "w0": ["e0", "e4", "e1", "e7"],
    "w1": ["e2", "e5", "e8"],
    "w2": ["e3", "e6", "e9"]
  }
})";

// Hexagonal tiling with four faces whose polygon is a triangle with a
// non-vertex boundary lattice point: the surface has a weighted-blowup
// (stacky) boundary divisor and two parallel zig-zag paths.
const std::string kWf1 = R"({
  "blacks": ["b0", "b1", "b2", "b3"],
  "whites": ["w0", "w1", "w2", "w3"],
  "edges": [
    {"id": "e1_0", "black": "b0", "white": "w0", "shift": [0, 0]},
    {"id": "e1_1", "black": "b1", "white": "w1", "shift": [0, 0]},
    {"id": "e1_2", "black": "b2", "white": "w2", "shift": [0, 0]},
    {"id": "e1_3", "black": "b3", "white": "w3", "shift": [0, 0]},
    {"id": "e2_0", "black": "b0", "white": "w1", "shift": [0, 0]},
    {"id": "e2_1", "black": "b1", "white": "w2", "shift": [0, 0]},
    {"id": "e2_2", "black": "b2", "white": "w3", "shift": [0, 0]},
    {"id": "e2_3", "black": "b3", "white": "w0", "shift": [1, -1]},
    {"id": "e3_0", "black": "b0", "white": "w2", "shift": [0, 1]},
    {"id": "e3_1", "black": "b1", "white": "w3", "shift": [0, 1]},
    {"id": "e3_2", "black": "b2", "white": "w0", "shift": [1, 0]},
    {"id": "e3_3", "black": "b3", "white": "w1", "shift": [1, 0]}
  ],
  "cyclic_order": {
    "b0": ["e3_0", "e1_0", "e2_0"],
    "b1": ["e3_1", "e1_1", "e2_1"],
    "b2": ["e3_2", "e1_2", "e2_2"],
    "b3": ["e3_3", "e1_3", "e2_3"],
    "w0": ["e1_0", "e2_3", "e3_2"],
    "w1": ["e1_1", "e2_0", "e3_3"],
    "w2": ["e1_2", "e2_1", "e3_0"],
    "w3": ["e1_3", "e2_2", "e3_1"]
  },
  "positions": {
    "den": 8,
    "nodes": {
      "b0": [3, 1],
      "b1": [5, 7],
      "b2": [7, 5],
      "b3": [1, 3],
      "w0": [0, 0],
      "w1": [2, 6],
      "w2": [4, 4],
      "w3": [6, 2]
    }
  }
})";

struct Entry {
  const char* name;
  const std::string* doc;
};

const Entry kEntries[] = {
    {"c3", &kC3},
    {"dp0", &kDp0},
    {"f0", &kF0},
    {"f1", &kF1},
    {"wf1", &kWf1},
};

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const Entry& e : kEntries) out.push_back(e.name);
  return out;
}

const std::string& fixture_document(const std::string& name) {
  for (const Entry& e : kEntries)
    if (name == e.name) return *e.doc;
  throw StructuralError("unknown fixture '" + name + "'");
}

DimerModel fixture_model(const std::string& name) {
  return parse_dimer(fixture_document(name));
}

}  // namespace dimertoric
