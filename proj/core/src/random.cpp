#include "symcone/random.hpp"

#include <cmath>
#include <numbers>

namespace symcone {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 1)));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Eigen::VectorXd random_unit_vector(int d, Rng& rng) {
  Eigen::VectorXd v(d);
  double n = 0.0;
  while (n < 1e-12) {
    for (int i = 0; i < d; ++i) v[i] = rng.normal();
    n = v.norm();
  }
  return v / n;
}

Eigen::VectorXd random_ball_vector(int d, Rng& rng) {
  Eigen::VectorXd u = random_unit_vector(d, rng);
  return std::pow(rng.uniform(), 1.0 / d) * u;
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
  Eigen::MatrixXd g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  // Sign fix so that Q is Haar distributed.
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

AlgebraElement random_with_eigenvalues(const StructurePtr& structure,
                                       const Eigen::VectorXd& values,
                                       Rng& rng) {
  AlgebraElement out(structure);
  for (std::size_t b = 0; b < structure->num_blocks(); ++b) {
    const Block& blk = structure->block(b);
    const int off = structure->rank_offset(b);
    switch (blk.kind) {
      case BlockKind::kOrthant:
        out.orthant_block(b) = values.segment(off, blk.dim);
        break;
      case BlockKind::kSoc: {
        const Eigen::VectorXd u = random_unit_vector(blk.dim, rng);
        const double hi = values[off];
        const double lo = values[off + 1];
        out.soc_vector(b) = 0.5 * (hi - lo) * u;
        out.soc_scalar(b) = 0.5 * (hi + lo);
        break;
      }
      case BlockKind::kPsd: {
        const Eigen::MatrixXd q = random_orthogonal(blk.dim, rng);
        out.psd_block(b) =
            q * values.segment(off, blk.dim).asDiagonal() * q.transpose();
        break;
      }
    }
  }
  return AlgebraElement(structure, out.storage());
}

AlgebraElement random_bounded_loss(const StructurePtr& structure, Rng& rng) {
  Eigen::VectorXd values(structure->rank());
  for (int i = 0; i < values.size(); ++i) values[i] = rng.uniform(-1.0, 1.0);
  return random_with_eigenvalues(structure, values, rng);
}

AlgebraElement random_trace_one(const StructurePtr& structure, Rng& rng) {
  Eigen::VectorXd values(structure->rank());
  for (int i = 0; i < values.size(); ++i) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    values[i] = -std::log(u);
  }
  values /= values.sum();
  AlgebraElement x = random_with_eigenvalues(structure, values, rng);
  // Pin the trace against round-off in the frame rotation.
  return x / trace(x);
}

AlgebraElement random_element(const StructurePtr& structure, Rng& rng,
                              double scale) {
  Eigen::VectorXd values(structure->rank());
  for (int i = 0; i < values.size(); ++i) values[i] = scale * rng.normal();
  return random_with_eigenvalues(structure, values, rng);
}

}  // namespace symcone
