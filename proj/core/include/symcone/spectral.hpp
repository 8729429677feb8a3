#pragma once

#include <functional>
#include <vector>

#include "symcone/element.hpp"

namespace symcone {

// Type-II spectral decomposition x = sum_i lambda_i q_i over a Jordan frame.
//
// Ordering: blocks in structure order. Orthant blocks keep coordinate order
// (their frame is the standard basis); SOC and PSD blocks list eigenvalues in
// descending order. Each q_i is supported on a single block.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<AlgebraElement> frame;
  // Index of the block that carries q_i.
  std::vector<std::size_t> block_of;

  AlgebraElement reconstruct() const;
};

SpectralDecomposition spectral_decompose(const AlgebraElement& x);

// Eigenvalues only, in the same order as spectral_decompose.
Eigen::VectorXd eigenvalues(const AlgebraElement& x);
double min_eigenvalue(const AlgebraElement& x);
double max_eigenvalue(const AlgebraElement& x);

using ScalarFn = std::function<double(double)>;

// Löwner extension: sum_i lambda_i q_i  ->  sum_i f(lambda_i) q_i.
AlgebraElement lowner(const ScalarFn& f, const AlgebraElement& x);

AlgebraElement exp_element(const AlgebraElement& x);
// Requires x in the interior: lambda_min(x) > kInteriorTolerance * max(1, |x|),
// otherwise throws DomainError.
AlgebraElement ln_element(const AlgebraElement& x);

// exp(x) / tr(exp(x)), evaluated as exp(x - lambda_max(x) e) / tr(...) so that
// large arguments do not overflow.
AlgebraElement normalized_exp(const AlgebraElement& x);

inline constexpr double kInteriorTolerance = 1e-12;

// Throws DomainError unless x passes the interior test used by ln_element.
void require_interior(const AlgebraElement& x, const char* op);

bool in_cone(const AlgebraElement& x, double tol);
bool in_interior(const AlgebraElement& x, double tol);
// x <=_K y  iff  y - x in K.
bool cone_leq(const AlgebraElement& x, const AlgebraElement& y, double tol);

}  // namespace symcone
