#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// binary. Each suite runs `cases` independent cases and reports the largest
// violation it saw, normalized so that a case fails when it exceeds 1.

#include <cstdint>
#include <string>
#include <vector>

#include "symcone/cone.hpp"

namespace properties {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  // max over cases of (observed error / tolerance); <= 1 when all pass.
  double worst_ratio = 0.0;
  bool passed() const { return cases > 0 && failures == 0; }
};

// Structures the suites cycle through: one of each block kind plus two
// direct sums.
std::vector<symcone::StructurePtr> default_structures();

SuiteResult frame_axioms(std::uint64_t seed, int cases);
SuiteResult exp_ln_inverse(std::uint64_t seed, int cases);
SuiteResult shift_identity(std::uint64_t seed, int cases);
SuiteResult golden_thompson(std::uint64_t seed, int cases);
SuiteResult quadratic_exp_bound(std::uint64_t seed, int cases);
SuiteResult entropy_central_bound(std::uint64_t seed, int cases);
SuiteResult three_point_identity(std::uint64_t seed, int cases);
SuiteResult gradient_finite_difference(std::uint64_t seed, int cases);
SuiteResult variational_min_eigenvalue(std::uint64_t seed, int cases);
SuiteResult potential_bounds(std::uint64_t seed, int cases);

std::vector<SuiteResult> all_suites(std::uint64_t seed, int cases);

}  // namespace properties
