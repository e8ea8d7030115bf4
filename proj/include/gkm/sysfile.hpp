#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "gkm/system.hpp"

namespace gkm {

/// System file schema (UTF-8 JSON): rank, vertices (id, moment, isotropy as
/// a list of generator matrices), congruences (terms with rational-string
/// coefficients and optional twist matrices, modulus, order), classes (name
/// -> vertex -> polynomial string in the expression grammar).

nlohmann::ordered_json system_to_json(const CongruenceSystem& sys);

/// Builds the system without validating it; callers run validate_system.
CongruenceSystem system_from_json(const nlohmann::json& doc);

/// Serialization is byte-stable: identical systems produce identical files.
void write_system_file(const CongruenceSystem& sys, const std::string& path);

/// Reads, builds and validates. The report carries whatever validation found;
/// the system is usable when report.ok().
std::pair<CongruenceSystem, ValidationReport> read_system_file(const std::string& path);

}  // namespace gkm
