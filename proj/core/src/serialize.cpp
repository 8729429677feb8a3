#include "symcone/serialize.hpp"

#include "symcone/errors.hpp"

namespace symcone {

nlohmann::json structure_to_json(const ConeStructure& structure) {
  nlohmann::json out = nlohmann::json::array();
  for (const Block& b : structure.blocks()) {
    out.push_back({{"kind", std::string(to_string(b.kind))}, {"dim", b.dim}});
  }
  return out;
}

StructurePtr structure_from_json(const nlohmann::json& j) {
  if (j.is_string()) return ConeStructure::parse(j.get<std::string>());
  if (!j.is_array()) {
    throw ConfigError("structure must be a JSON array or a spec string");
  }
  std::vector<Block> blocks;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("kind") || !item.contains("dim")) {
      throw ConfigError("structure entry needs \"kind\" and \"dim\": " +
                        item.dump());
    }
    const std::string kind = item.at("kind").get<std::string>();
    const int dim = item.at("dim").get<int>();
    if (kind == "orthant") {
      blocks.push_back({BlockKind::kOrthant, dim});
    } else if (kind == "soc") {
      blocks.push_back({BlockKind::kSoc, dim});
    } else if (kind == "psd") {
      blocks.push_back({BlockKind::kPsd, dim});
    } else {
      throw ConfigError("unknown block kind \"" + kind + "\"");
    }
  }
  return ConeStructure::make(std::move(blocks));
}

nlohmann::json element_to_json(const AlgebraElement& x) {
  return {{"structure", structure_to_json(x.structure())},
          {"values", x.to_packed()}};
}

AlgebraElement element_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("structure") || !j.contains("values")) {
    throw ConfigError("element JSON needs \"structure\" and \"values\"");
  }
  return element_from_json(structure_from_json(j.at("structure")),
                           j.at("values"));
}

AlgebraElement element_from_json(const StructurePtr& structure,
                                 const nlohmann::json& values) {
  if (!values.is_array()) throw ConfigError("element values must be an array");
  try {
    return AlgebraElement::from_packed(structure,
                                       values.get<std::vector<double>>());
  } catch (const StructureMismatch& e) {
    throw ConfigError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("element values: ") + e.what());
  }
}

}  // namespace symcone
