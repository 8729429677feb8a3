#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace symcone {

enum class BlockKind { kOrthant, kSoc, kPsd };

// One primitive summand of a Euclidean Jordan algebra.
//   kOrthant: R^dim with the componentwise product.
//   kSoc:     R^dim x R, elements (x, s); the cone is {||x||_2 <= s}.
//   kPsd:     real symmetric dim x dim matrices with (XY + YX) / 2.
struct Block {
  BlockKind kind;
  int dim;

  int rank() const;
  // Number of independent real coordinates.
  int ambient_dim() const;
  // Number of doubles used to store the block (PSD blocks keep the full matrix).
  int storage_size() const;

  bool operator==(const Block&) const = default;
};

class ConeStructure;
using StructurePtr = std::shared_ptr<const ConeStructure>;

// An ordered direct sum of primitive blocks. Immutable once built; elements
// hold it through a shared pointer.
class ConeStructure {
 public:
  explicit ConeStructure(std::vector<Block> blocks);

  static StructurePtr make(std::vector<Block> blocks);

  // Parses "orthant:3,psd:2,soc:5" (also accepts "no3+s2+soc5" style tokens)
  // or one of the named presets.
  static StructurePtr parse(std::string_view spec);
  static StructurePtr preset(std::string_view name);
  static std::vector<std::string> preset_names();

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  const Block& block(std::size_t i) const { return blocks_[i]; }

  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  int storage_size() const { return storage_size_; }

  // Offset of block i in the flat coefficient storage.
  int storage_offset(std::size_t i) const { return storage_offsets_[i]; }
  // Offset of block i's eigenvalues in the flat eigenvalue list.
  int rank_offset(std::size_t i) const { return rank_offsets_[i]; }

  // Canonical "orthant:3,psd:2,..." form; parse(to_string()) round-trips.
  std::string to_string() const;

  bool operator==(const ConeStructure& other) const {
    return blocks_ == other.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<int> storage_offsets_;
  std::vector<int> rank_offsets_;
  int rank_ = 0;
  int ambient_dim_ = 0;
  int storage_size_ = 0;
};

inline StructurePtr orthant(int d) {
  return ConeStructure::make({{BlockKind::kOrthant, d}});
}
inline StructurePtr soc(int d) {
  return ConeStructure::make({{BlockKind::kSoc, d}});
}
inline StructurePtr psd(int n) {
  return ConeStructure::make({{BlockKind::kPsd, n}});
}

std::string_view to_string(BlockKind kind);

}  // namespace symcone
