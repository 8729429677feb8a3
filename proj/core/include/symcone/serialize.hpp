#pragma once

#include <nlohmann/json.hpp>

#include "symcone/element.hpp"

namespace symcone {

// Structure: [{"kind": "orthant"|"soc"|"psd", "dim": n}, ...]
nlohmann::json structure_to_json(const ConeStructure& structure);
StructurePtr structure_from_json(const nlohmann::json& j);

// Element: {"structure": [...], "values": [...]} with block-aligned flat
// values; PSD blocks are written as the row-major upper triangle.
nlohmann::json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const nlohmann::json& j);
// Values only, against a known structure.
AlgebraElement element_from_json(const StructurePtr& structure,
                                 const nlohmann::json& values);

}  // namespace symcone
