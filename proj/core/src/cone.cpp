#include "symcone/cone.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "symcone/errors.hpp"

namespace symcone {

int Block::rank() const {
  switch (kind) {
    case BlockKind::kOrthant: return dim;
    case BlockKind::kSoc: return 2;
    case BlockKind::kPsd: return dim;
  }
  return 0;
}

int Block::ambient_dim() const {
  switch (kind) {
    case BlockKind::kOrthant: return dim;
    case BlockKind::kSoc: return dim + 1;
    case BlockKind::kPsd: return dim * (dim + 1) / 2;
  }
  return 0;
}

int Block::storage_size() const {
  switch (kind) {
    case BlockKind::kOrthant: return dim;
    case BlockKind::kSoc: return dim + 1;
    case BlockKind::kPsd: return dim * dim;
  }
  return 0;
}

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::kOrthant: return "orthant";
    case BlockKind::kSoc: return "soc";
    case BlockKind::kPsd: return "psd";
  }
  return "?";
}

ConeStructure::ConeStructure(std::vector<Block> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw ConfigError("cone structure needs at least one block");
  }
  for (const Block& b : blocks_) {
    if (b.dim < 1) {
      throw ConfigError("block dimension must be positive, got " +
                        std::to_string(b.dim) + " for " +
                        std::string(symcone::to_string(b.kind)));
    }
    storage_offsets_.push_back(storage_size_);
    rank_offsets_.push_back(rank_);
    storage_size_ += b.storage_size();
    rank_ += b.rank();
    ambient_dim_ += b.ambient_dim();
  }
}

StructurePtr ConeStructure::make(std::vector<Block> blocks) {
  return std::make_shared<const ConeStructure>(std::move(blocks));
}

std::string ConeStructure::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) os << ',';
    os << symcone::to_string(blocks_[i].kind) << ':' << blocks_[i].dim;
  }
  return os.str();
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

int parse_dim(std::string_view digits, std::string_view token) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      digits.empty()) {
    throw ConfigError("bad block dimension in '" + std::string(token) + "'");
  }
  return value;
}

Block parse_block(std::string_view raw) {
  std::string token = lower(raw);
  token.erase(std::remove_if(token.begin(), token.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              token.end());
  std::string_view t = token;
  if (auto colon = t.find(':'); colon != std::string_view::npos) {
    std::string_view kind = t.substr(0, colon);
    int dim = parse_dim(t.substr(colon + 1), raw);
    if (kind == "orthant" || kind == "no") return {BlockKind::kOrthant, dim};
    if (kind == "soc") return {BlockKind::kSoc, dim};
    if (kind == "psd" || kind == "s") return {BlockKind::kPsd, dim};
    throw ConfigError("unknown block kind '" + std::string(kind) + "'");
  }
  // Compact forms: no3, soc5, psd2, s2.
  for (auto [prefix, kind] :
       {std::pair{std::string_view("orthant"), BlockKind::kOrthant},
        std::pair{std::string_view("soc"), BlockKind::kSoc},
        std::pair{std::string_view("psd"), BlockKind::kPsd},
        std::pair{std::string_view("no"), BlockKind::kOrthant},
        std::pair{std::string_view("s"), BlockKind::kPsd}}) {
    if (t.starts_with(prefix)) {
      return {kind, parse_dim(t.substr(prefix.size()), raw)};
    }
  }
  throw ConfigError("cannot parse block '" + std::string(raw) + "'");
}

}  // namespace

std::vector<std::string> ConeStructure::preset_names() {
  return {"fig2-left", "fig2-midleft", "fig2-midright", "fig2-right"};
}

StructurePtr ConeStructure::preset(std::string_view name) {
  using K = BlockKind;
  if (name == "fig2-left") {
    return make({{K::kSoc, 2}, {K::kSoc, 3}, {K::kSoc, 4}, {K::kSoc, 5},
                 {K::kSoc, 6}});
  }
  if (name == "fig2-midleft") return make({{K::kOrthant, 5}, {K::kSoc, 5}});
  if (name == "fig2-midright") return make({{K::kPsd, 3}, {K::kSoc, 5}});
  if (name == "fig2-right") {
    return make({{K::kOrthant, 3}, {K::kPsd, 2}, {K::kPsd, 3}, {K::kSoc, 2},
                 {K::kSoc, 3}});
  }
  throw ConfigError("unknown structure preset '" + std::string(name) + "'");
}

StructurePtr ConeStructure::parse(std::string_view spec) {
  for (const auto& name : preset_names()) {
    if (spec == name) return preset(name);
  }
  std::vector<Block> blocks;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find_first_of(",+", start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view piece = spec.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) {
      blocks.push_back(parse_block(piece));
    }
    start = end + 1;
  }
  if (blocks.empty()) {
    throw ConfigError("empty cone structure spec");
  }
  return make(std::move(blocks));
}

}  // namespace symcone
