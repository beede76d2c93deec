#pragma once

// Document layer: JSON input for dimer models and JSON report output for
// every CLI operation.  Parsing checks document structure only; graph-level
// validation lives in Dimer::validate / Dimer::compile.  All report
// builders emit a stable key order, so equal inputs give byte-identical
// bytes.

#include <string>

#include "dimertoric/collections.hpp"
#include "dimertoric/superpotential.hpp"

namespace dimertoric {

// Throws StructuralError naming the offending JSON path.
DimerModel parse_dimer(const std::string& text);
std::string serialize_dimer(const DimerModel& model);

std::string validation_report_json(const ValidationReport& report);
std::string quiver_report_json(const Dimer& dimer);
std::string zigzag_report_json(const Dimer& dimer);
std::string matchings_report_json(const Dimer& dimer);
std::string polygon_report_json(const Polygon& poly);
std::string classification_report_json(const Polygon& poly,
                                       const ClassificationReport& cls);
std::string collection_report_json(const Collection& col);
std::string verification_report_json(const VerificationReport& report);
std::string crosscheck_report_json(const CrossCheckReport& report);
std::string superpotential_report_json(const WeightTable& wt, i64 lift_bound,
                                       int max_length = 24, int window = 6);
std::string curved_report_json(const Dimer& dimer, const CurvedDiagram& diagram);

}  // namespace dimertoric
