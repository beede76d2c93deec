#pragma once

// Deterministic SVG renderings: fundamental-domain drawing of the graph,
// the dual quiver, the class polygon, and the Hom digraph of a verified
// collection.  Byte-identical output for identical inputs; `seed` only
// perturbs the fallback layout used when the model carries no positions.

#include <map>
#include <string>

#include "dimertoric/collections.hpp"

namespace dimertoric {

std::map<std::string, std::string> render_figures(
    const Dimer& dimer, const Polygon* poly, const ClassificationReport* cls,
    const Collection* col, const VerificationReport* ver, unsigned seed = 0);

}  // namespace dimertoric
