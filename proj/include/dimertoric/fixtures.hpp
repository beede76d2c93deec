#pragma once

// Bundled example models, embedded as the same documents that ship in the
// fixtures/ directory.

#include <string>
#include <vector>

#include "dimertoric/dimer.hpp"

namespace dimertoric {

std::vector<std::string> fixture_names();
// Throws StructuralError for unknown names.
const std::string& fixture_document(const std::string& name);
DimerModel fixture_model(const std::string& name);

}  // namespace dimertoric
