#pragma once

// JSON schemas for specs, positions, and the report types, plus the CSV
// emitters. Spec objects are discriminated by a "variant" field:
//   {"variant":"numeric","m":4,"losing":[1],"unit_mode":true}
//   {"variant":"field","p":2,"n":8,"irreducible":"0x11B"}   (mask for p=2,
//                       "irreducible":[c0,...,cn] coefficient list otherwise)
//   {"variant":"chain","N":15,"g":2}
// A position is {"spec":{...},"heaps":[...]}. Serialization is canonical
// (sorted keys, no whitespace), so parse -> serialize is byte-stable.

#include <string>
#include <utility>

#include <json.hpp>

#include "pcg/analysis.hpp"
#include "pcg/chain.hpp"
#include "pcg/collapse.hpp"
#include "pcg/game.hpp"
#include "pcg/grundy.hpp"

namespace pcg {

nlohmann::json spec_to_json(const GameSpec& spec);
GameSpec spec_from_json(const nlohmann::json& j);

nlohmann::json position_to_json(const GameSpec& spec, const Position& pos);
std::pair<GameSpec, Position> position_from_json(const nlohmann::json& j);

nlohmann::json move_to_json(const Move& move);
Move move_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const DensityReport& report);
nlohmann::json periodicity_to_json(const PeriodicityReport& report);
nlohmann::json sg_mult_entry_to_json(const SgMultEntry& entry);
nlohmann::json compression_to_json(const CompressionReport& report);
nlohmann::json alignment_row_to_json(const AlignmentScanRow& row);
nlohmann::json table_to_json(const std::vector<TableRow>& rows);

// Canonical single-line dump used everywhere JSON is printed.
std::string canonical_dump(const nlohmann::json& j);

std::string density_csv(const DensityReport& report);
std::string periodicity_csv(const PeriodicityReport& report);
std::string alignment_scan_csv(const std::vector<AlignmentScanRow>& rows);
std::string table_markdown(const std::vector<TableRow>& rows);

} // namespace pcg
