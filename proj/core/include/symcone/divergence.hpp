#pragma once

#include <optional>

#include "symcone/element.hpp"

namespace symcone {

// Symmetric-cone negative entropy Phi(x) = tr(x o ln x) = sum_i lambda_i ln lambda_i,
// its mirror-map gradient, and the induced Bregman divergence. Every function
// here requires interior arguments (see require_interior) unless noted.

struct EntropyEval {
  double value;
  // ln x + e, present only when requested.
  std::optional<AlgebraElement> gradient;
};

EntropyEval evaluate_entropy(const AlgebraElement& x, bool with_gradient);

double entropy(const AlgebraElement& x);

// grad Phi(x) = ln x + e.
AlgebraElement entropy_gradient(const AlgebraElement& x);

// (grad Phi)^{-1}(g) = exp(g - e). Defined on the whole algebra.
AlgebraElement entropy_gradient_inverse(const AlgebraElement& g);

// H(x, y) = tr(x o ln x - x o ln y + y - x).
double bregman(const AlgebraElement& x, const AlgebraElement& y);

// Same value with tiny negative round-off in [-1e-9, 0) reported as 0.
double bregman_for_report(const AlgebraElement& x, const AlgebraElement& y);

// argmin over the trace-one slice of H(., y), which is y / tr(y). Requires
// lambda_min(y) > 0.
AlgebraElement bregman_project_trace_one(const AlgebraElement& y);

// <z - y, ln y - ln x> - (H(z, x) - H(z, y) - H(y, x)). Identically zero; kept
// as a numerical probe.
double three_point_gap(const AlgebraElement& x, const AlgebraElement& y,
                       const AlgebraElement& z);

}  // namespace symcone
