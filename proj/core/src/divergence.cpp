#include "symcone/divergence.hpp"

#include <cmath>

#include "symcone/errors.hpp"
#include "symcone/spectral.hpp"

namespace symcone {

EntropyEval evaluate_entropy(const AlgebraElement& x, bool with_gradient) {
  require_interior(x, "entropy");
  const Eigen::VectorXd lambda = eigenvalues(x);
  double value = 0.0;
  for (double l : lambda) value += l * std::log(l);
  EntropyEval out{value, std::nullopt};
  if (with_gradient) out.gradient = entropy_gradient(x);
  return out;
}

double entropy(const AlgebraElement& x) {
  return evaluate_entropy(x, false).value;
}

AlgebraElement entropy_gradient(const AlgebraElement& x) {
  return ln_element(x) + identity(x.structure_ptr());
}

AlgebraElement entropy_gradient_inverse(const AlgebraElement& g) {
  return exp_element(g - identity(g.structure_ptr()));
}

double bregman(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_structure(x, y, "bregman");
  require_interior(x, "bregman");
  require_interior(y, "bregman");
  const AlgebraElement ln_x = ln_element(x);
  const AlgebraElement ln_y = ln_element(y);
  return inner(x, ln_x) - inner(x, ln_y) + trace(y) - trace(x);
}

double bregman_for_report(const AlgebraElement& x, const AlgebraElement& y) {
  const double h = bregman(x, y);
  return (h < 0.0 && h >= -1e-9) ? 0.0 : h;
}

AlgebraElement bregman_project_trace_one(const AlgebraElement& y) {
  if (!(min_eigenvalue(y) > 0.0)) {
    throw DomainError("bregman_project_trace_one: argument is not in the cone interior");
  }
  return y / trace(y);
}

double three_point_gap(const AlgebraElement& x, const AlgebraElement& y,
                       const AlgebraElement& z) {
  const double lhs = inner(z - y, ln_element(y) - ln_element(x));
  const double rhs = bregman(z, x) - bregman(z, y) - bregman(y, x);
  return lhs - rhs;
}

}  // namespace symcone
