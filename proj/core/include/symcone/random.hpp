#pragma once

#include <cstdint>
#include <random>

#include "symcone/element.hpp"

namespace symcone {

// Seedable generator used by every sampler and experiment.
//
// Stream: std::mt19937_64 seeded with the given 64-bit seed. Uniforms take the
// top 53 bits of each draw; normals use the Box-Muller transform on two
// uniforms. Both mappings are spelled out here instead of using
// std::*_distribution so sample streams do not depend on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for (seed, index), e.g. one per experiment instance.
  static Rng for_stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Eigen::VectorXd random_unit_vector(int d, Rng& rng);
// Uniform in the closed unit ball of R^d.
Eigen::VectorXd random_ball_vector(int d, Rng& rng);
// Haar-distributed orthogonal n x n matrix.
Eigen::MatrixXd random_orthogonal(int n, Rng& rng);

// Assembles sum_i values[i] q_i over a random Jordan frame of the structure
// (standard basis on orthant blocks, random axis on SOC blocks, random
// orthonormal basis on PSD blocks). `values` is in eigenvalue order.
AlgebraElement random_with_eigenvalues(const StructurePtr& structure,
                                       const Eigen::VectorXd& values,
                                       Rng& rng);

// Loss with every eigenvalue uniform on [-1, 1], so -e <= m <= e.
AlgebraElement random_bounded_loss(const StructurePtr& structure, Rng& rng);
// Point of the trace-one slice; eigenvalues are flat-Dirichlet over the rank.
AlgebraElement random_trace_one(const StructurePtr& structure, Rng& rng);
// Eigenvalues i.i.d. normal with the given scale.
AlgebraElement random_element(const StructurePtr& structure, Rng& rng,
                              double scale = 1.0);

}  // namespace symcone
