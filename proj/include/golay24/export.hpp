// Serialization of the derived artifacts: the triangle labelings, the
// three permutation tables, the subset family, and the generator matrix,
// as JSON (audit bundle), plain text, and CSV.

#pragma once

#include <string>

#include <json.hpp>

#include "golay24/golay_construction.hpp"
#include "golay24/report.hpp"

namespace golay24 {

/// All 24 labels as {label, parity, rep or null, sign}; hexagon labels
/// carry no matrix representative, so rep and parity are null there.
nlohmann::json labelings_json();

/// {"sigma": [...], "delta": [...], "kappa": [...]}, 1-based image arrays.
nlohmann::json permutation_tables_json();

/// The subset attached to every label plus R6 and R12.
nlohmann::json subsets_json();

/// Array of twelve 24-character row strings.
nlohmann::json matrix_json(const GeneratorMatrix& m);

/// Twelve lines of 24 '0'/'1' characters, each newline-terminated.
std::string matrix_text(const GeneratorMatrix& m);

/// Twelve lines of 24 comma-separated bits.
std::string matrix_csv(const GeneratorMatrix& m);

/// The whole derivation in one document: labelings, permutation tables,
/// subsets, and the matrix.
nlohmann::json bundle_json();

nlohmann::json report_json(const Report& report);

}  // namespace golay24
