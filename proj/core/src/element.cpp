#include "symcone/element.hpp"

#include <cmath>

#include "symcone/errors.hpp"

namespace symcone {

AlgebraElement::AlgebraElement(StructurePtr structure)
    : structure_(std::move(structure)),
      storage_(Eigen::VectorXd::Zero(structure_->storage_size())) {}

AlgebraElement::AlgebraElement(StructurePtr structure, Eigen::VectorXd storage)
    : structure_(std::move(structure)), storage_(std::move(storage)) {
  if (storage_.size() != structure_->storage_size()) {
    throw StructureMismatch("element storage has " +
                            std::to_string(storage_.size()) +
                            " coefficients, structure " +
                            structure_->to_string() + " needs " +
                            std::to_string(structure_->storage_size()));
  }
  symmetrize();
}

void AlgebraElement::symmetrize() {
  for (std::size_t b = 0; b < structure_->num_blocks(); ++b) {
    if (structure_->block(b).kind != BlockKind::kPsd) continue;
    MatMap m = psd_block(b);
    Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    m = sym;
  }
}

AlgebraElement AlgebraElement::from_packed(StructurePtr structure,
                                           const std::vector<double>& packed) {
  if (static_cast<int>(packed.size()) != structure->ambient_dim()) {
    throw StructureMismatch("packed element has " +
                            std::to_string(packed.size()) +
                            " values, structure " + structure->to_string() +
                            " needs " +
                            std::to_string(structure->ambient_dim()));
  }
  AlgebraElement out(structure);
  std::size_t k = 0;
  for (std::size_t b = 0; b < structure->num_blocks(); ++b) {
    const Block& blk = structure->block(b);
    if (blk.kind == BlockKind::kPsd) {
      MatMap m = out.psd_block(b);
      for (int i = 0; i < blk.dim; ++i) {
        for (int j = i; j < blk.dim; ++j) {
          m(i, j) = packed[k];
          m(j, i) = packed[k];
          ++k;
        }
      }
    } else {
      const int off = structure->storage_offset(b);
      for (int i = 0; i < blk.storage_size(); ++i) {
        out.storage_[off + i] = packed[k++];
      }
    }
  }
  return out;
}

std::vector<double> AlgebraElement::to_packed() const {
  std::vector<double> packed;
  packed.reserve(structure_->ambient_dim());
  for (std::size_t b = 0; b < structure_->num_blocks(); ++b) {
    const Block& blk = structure_->block(b);
    if (blk.kind == BlockKind::kPsd) {
      ConstMatMap m = psd_block(b);
      for (int i = 0; i < blk.dim; ++i) {
        for (int j = i; j < blk.dim; ++j) packed.push_back(m(i, j));
      }
    } else {
      const int off = structure_->storage_offset(b);
      for (int i = 0; i < blk.storage_size(); ++i) {
        packed.push_back(storage_[off + i]);
      }
    }
  }
  return packed;
}

AlgebraElement::ConstVecMap AlgebraElement::orthant_block(std::size_t b) const {
  return {storage_.data() + structure_->storage_offset(b),
          structure_->block(b).dim};
}
AlgebraElement::VecMap AlgebraElement::orthant_block(std::size_t b) {
  return {storage_.data() + structure_->storage_offset(b),
          structure_->block(b).dim};
}
AlgebraElement::ConstVecMap AlgebraElement::soc_vector(std::size_t b) const {
  return {storage_.data() + structure_->storage_offset(b),
          structure_->block(b).dim};
}
AlgebraElement::VecMap AlgebraElement::soc_vector(std::size_t b) {
  return {storage_.data() + structure_->storage_offset(b),
          structure_->block(b).dim};
}
double AlgebraElement::soc_scalar(std::size_t b) const {
  return storage_[structure_->storage_offset(b) + structure_->block(b).dim];
}
double& AlgebraElement::soc_scalar(std::size_t b) {
  return storage_[structure_->storage_offset(b) + structure_->block(b).dim];
}
AlgebraElement::ConstMatMap AlgebraElement::psd_block(std::size_t b) const {
  const int n = structure_->block(b).dim;
  return {storage_.data() + structure_->storage_offset(b), n, n};
}
AlgebraElement::MatMap AlgebraElement::psd_block(std::size_t b) {
  const int n = structure_->block(b).dim;
  return {storage_.data() + structure_->storage_offset(b), n, n};
}

bool AlgebraElement::same_structure(const AlgebraElement& other) const {
  return structure_ == other.structure_ || *structure_ == *other.structure_;
}

void AlgebraElement::check_same(const AlgebraElement& other,
                                const char* op) const {
  require_same_structure(*this, other, op);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_same(other, "operator+");
  storage_ += other.storage_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_same(other, "operator-");
  storage_ -= other.storage_;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(double c) {
  storage_ *= c;
  return *this;
}

void require_same_structure(const AlgebraElement& a, const AlgebraElement& b,
                            const char* op) {
  if (!a.same_structure(b)) {
    throw StructureMismatch(std::string(op) + ": structures differ (" +
                            a.structure().to_string() + " vs " +
                            b.structure().to_string() + ")");
  }
}

AlgebraElement identity(const StructurePtr& structure) {
  AlgebraElement e(structure);
  for (std::size_t b = 0; b < structure->num_blocks(); ++b) {
    switch (structure->block(b).kind) {
      case BlockKind::kOrthant: e.orthant_block(b).setOnes(); break;
      case BlockKind::kSoc: e.soc_scalar(b) = 1.0; break;
      case BlockKind::kPsd: e.psd_block(b).setIdentity(); break;
    }
  }
  return e;
}

AlgebraElement jordan_product(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_structure(x, y, "jordan_product");
  AlgebraElement z(x.structure_ptr());
  const ConeStructure& s = x.structure();
  for (std::size_t b = 0; b < s.num_blocks(); ++b) {
    switch (s.block(b).kind) {
      case BlockKind::kOrthant:
        z.orthant_block(b) =
            x.orthant_block(b).cwiseProduct(y.orthant_block(b));
        break;
      case BlockKind::kSoc: {
        // (x, s) o (x', s') = (s x' + s' x, x^T x' + s s')
        const double sx = x.soc_scalar(b);
        const double sy = y.soc_scalar(b);
        z.soc_vector(b) = sx * y.soc_vector(b) + sy * x.soc_vector(b);
        z.soc_scalar(b) = x.soc_vector(b).dot(y.soc_vector(b)) + sx * sy;
        break;
      }
      case BlockKind::kPsd: {
        Eigen::MatrixXd xy = x.psd_block(b) * y.psd_block(b);
        z.psd_block(b) = 0.5 * (xy + xy.transpose());
        break;
      }
    }
  }
  return z;
}

double trace(const AlgebraElement& x) {
  const ConeStructure& s = x.structure();
  double tr = 0.0;
  for (std::size_t b = 0; b < s.num_blocks(); ++b) {
    switch (s.block(b).kind) {
      case BlockKind::kOrthant: tr += x.orthant_block(b).sum(); break;
      case BlockKind::kSoc: tr += 2.0 * x.soc_scalar(b); break;
      case BlockKind::kPsd: tr += x.psd_block(b).trace(); break;
    }
  }
  return tr;
}

double inner(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_structure(x, y, "inner");
  const ConeStructure& s = x.structure();
  double acc = 0.0;
  for (std::size_t b = 0; b < s.num_blocks(); ++b) {
    switch (s.block(b).kind) {
      case BlockKind::kOrthant:
        acc += x.orthant_block(b).dot(y.orthant_block(b));
        break;
      case BlockKind::kSoc:
        acc += 2.0 * (x.soc_vector(b).dot(y.soc_vector(b)) +
                      x.soc_scalar(b) * y.soc_scalar(b));
        break;
      case BlockKind::kPsd:
        acc += x.psd_block(b).cwiseProduct(y.psd_block(b)).sum();
        break;
    }
  }
  return acc;
}

double norm(const AlgebraElement& x) { return std::sqrt(inner(x, x)); }

double max_abs_diff(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_structure(x, y, "max_abs_diff");
  return (x.storage() - y.storage()).cwiseAbs().maxCoeff();
}

}  // namespace symcone
