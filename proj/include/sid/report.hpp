#pragma once

// Report rendering: canonical JSON, plain-text tables and the SVG Venn diagram.
//
// Canonical JSON has sorted keys and prints every real number with exactly
// nine decimals, so reports can be diffed byte-for-byte against golden files.

#include <string>

#include <json.hpp>

#include "sid/decompose.hpp"
#include "sid/oracle.hpp"

namespace sid {

std::string canonical_dump(const nlohmann::json& value);

/// {"red", "un":{"X1|X2"}, "syn", "ext":{"X1"}, "method", "violations",
///  "residuals":{"joint","tc","coi"}}. Values in [-tol, 0) print as 0.
nlohmann::json atoms_json(const AtomSet& atoms, const Residuals& residuals);
nlohmann::json decomposition_json(const Decomposition& d);
nlohmann::json block_report_json(const BlockReport& report);
nlohmann::json common_part_json(const CommonPart& part);

std::string decomposition_text(const Decomposition& d);
/// One line per support row with its yellow/syn/unique/ext/plain tag.
std::string block_report_text(const BlockReport& report);

/// Three-circle diagram: Red in the centre, Un in the lenses, Syn in each
/// circle's private region, Ext in the outer crescents.
std::string venn_svg(const AtomSet& atoms);

/// Fixed nine-decimal formatting with negative zero and dust printed as 0.
std::string format_bits(double v, double tol = kTolerance);

}  // namespace sid
