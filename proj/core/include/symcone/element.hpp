#pragma once

#include <Eigen/Dense>

#include "symcone/cone.hpp"

namespace symcone {

// A value in the Jordan algebra of a ConeStructure, stored block-aligned in a
// flat vector:
//   orthant block: d entries
//   SOC block:     x (d entries) followed by s
//   PSD block:     the full symmetric n x n matrix, column-major
class AlgebraElement {
 public:
  using ConstVecMap = Eigen::Map<const Eigen::VectorXd>;
  using VecMap = Eigen::Map<Eigen::VectorXd>;
  using ConstMatMap = Eigen::Map<const Eigen::MatrixXd>;
  using MatMap = Eigen::Map<Eigen::MatrixXd>;

  // Zero element.
  explicit AlgebraElement(StructurePtr structure);
  // Takes raw storage; PSD blocks are symmetrized as (M + M^T) / 2.
  AlgebraElement(StructurePtr structure, Eigen::VectorXd storage);

  // Builds from the flat "independent coordinates" layout used on the wire:
  // PSD blocks as the row-major upper triangle.
  static AlgebraElement from_packed(StructurePtr structure,
                                    const std::vector<double>& packed);
  std::vector<double> to_packed() const;

  const ConeStructure& structure() const { return *structure_; }
  const StructurePtr& structure_ptr() const { return structure_; }
  const Eigen::VectorXd& storage() const { return storage_; }

  ConstVecMap orthant_block(std::size_t b) const;
  VecMap orthant_block(std::size_t b);
  ConstVecMap soc_vector(std::size_t b) const;
  VecMap soc_vector(std::size_t b);
  double soc_scalar(std::size_t b) const;
  double& soc_scalar(std::size_t b);
  ConstMatMap psd_block(std::size_t b) const;
  MatMap psd_block(std::size_t b);

  bool same_structure(const AlgebraElement& other) const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(double c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(AlgebraElement a, double c) { return a *= c; }
  friend AlgebraElement operator*(double c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator/(AlgebraElement a, double c) {
    return a *= 1.0 / c;
  }
  AlgebraElement operator-() const { return *this * -1.0; }

 private:
  void check_same(const AlgebraElement& other, const char* op) const;
  void symmetrize();

  StructurePtr structure_;
  Eigen::VectorXd storage_;
};

// Throws StructureMismatch unless both elements live in the same algebra.
void require_same_structure(const AlgebraElement& a, const AlgebraElement& b,
                            const char* op);

AlgebraElement identity(const StructurePtr& structure);
AlgebraElement jordan_product(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement square(const AlgebraElement& x) {
  return jordan_product(x, x);
}
double trace(const AlgebraElement& x);
// <x, y> = tr(x o y).
double inner(const AlgebraElement& x, const AlgebraElement& y);
// Norm induced by the trace inner product.
double norm(const AlgebraElement& x);
// Largest absolute difference between stored coefficients.
double max_abs_diff(const AlgebraElement& x, const AlgebraElement& y);

}  // namespace symcone
