#include "symcone/learners.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symcone/divergence.hpp"
#include "symcone/errors.hpp"
#include "symcone/spectral.hpp"

namespace symcone {

DoublingEpoch doubling_schedule(std::int64_t t, int rank) {
  if (t < 1) throw std::invalid_argument("doubling_schedule: t must be >= 1");
  if (rank < 2) throw std::invalid_argument("doubling_schedule: rank must be >= 2");
  const int epoch =
      std::bit_width(static_cast<std::uint64_t>(t)) - 1;  // floor(log2 t)
  const double eta = std::sqrt(std::ldexp(1.0, -epoch) * std::log(rank));
  return {epoch, eta};
}

double optimized_stepsize(std::int64_t horizon, int rank) {
  return std::sqrt(std::log(static_cast<double>(rank)) /
                   static_cast<double>(horizon));
}

double theoretical_bound(std::int64_t t, int rank, BoundMode mode) {
  const double base = std::sqrt(static_cast<double>(t) *
                                std::log(static_cast<double>(rank)));
  switch (mode) {
    case BoundMode::kOptimized: return 2.0 * base;
    case BoundMode::kDoubling: {
      constexpr double kSqrt2 = std::numbers::sqrt2;
      return 2.0 * kSqrt2 / (kSqrt2 - 1.0) * base;
    }
  }
  return 0.0;
}

bool loss_is_bounded(const AlgebraElement& m, double tol) {
  const Eigen::VectorXd lambda = eigenvalues(m);
  return lambda.minCoeff() >= -1.0 - tol && lambda.maxCoeff() <= 1.0 + tol;
}

LearnerState::LearnerState(StepsizePolicy policy, AlgebraElement zero,
                           AlgebraElement p)
    : policy_(policy),
      epoch_loss_(zero),
      total_loss_(std::move(zero)),
      iterate_(std::move(p)) {}

LearnerState LearnerState::initial(StructurePtr structure,
                                   StepsizePolicy policy) {
  const int r = structure->rank();
  AlgebraElement p = identity(structure) / static_cast<double>(r);
  LearnerState state(policy, AlgebraElement(structure), std::move(p));
  if (const auto* fixed = std::get_if<FixedStepsize>(&policy)) {
    if (!(fixed->eta > 0.0)) {
      throw std::invalid_argument("fixed stepsize must be positive");
    }
    state.eta_ = fixed->eta;
  } else {
    const DoublingEpoch first = doubling_schedule(1, std::max(r, 2));
    state.eta_ = first.eta;
    state.epoch_ = first.epoch;
  }
  return state;
}

LearnerState scmwu_step(const LearnerState& state, const AlgebraElement& m) {
  require_same_structure(state.iterate_, m, "scmwu_step");
  LearnerState next = state;
  if (!loss_is_bounded(m)) ++next.unbounded_losses_;
  next.step_ += 1;
  next.total_loss_ += m;
  next.epoch_loss_ += m;

  if (std::holds_alternative<DoublingStepsize>(state.policy_)) {
    const DoublingEpoch upcoming =
        doubling_schedule(next.step_ + 1, std::max(state.structure().rank(), 2));
    if (upcoming.epoch != state.epoch_) {
      next.epoch_loss_ = AlgebraElement(state.structure_ptr());
      next.epoch_ = upcoming.epoch;
      next.eta_ = upcoming.eta;
    }
  }
  next.iterate_ = normalized_exp(-next.eta_ * next.epoch_loss_);
  return next;
}

AlgebraElement ftrl_unconstrained(const AlgebraElement& cumulative_loss,
                                  double eta) {
  return exp_element(-eta * cumulative_loss -
                     identity(cumulative_loss.structure_ptr()));
}

AlgebraElement ftrl_iterate(const AlgebraElement& cumulative_loss, double eta) {
  const AlgebraElement e = identity(cumulative_loss.structure_ptr());
  const AlgebraElement scaled = -eta * cumulative_loss;
  // The projection is scale invariant, so the shifted minimizer
  // exp(-eta L - e - c e) = e^{-c} exp(-eta L - e) projects to the same point.
  const double shift = max_eigenvalue(scaled);
  const AlgebraElement y = exp_element(scaled - (1.0 + shift) * e);
  return bregman_project_trace_one(y);
}

AlgebraElement omd_intermediate(const AlgebraElement& p, const AlgebraElement& m,
                                double eta) {
  require_same_structure(p, m, "omd_step");
  // Iterates are exp images, so any positive eigenvalue is a legitimate
  // interior value; only lambda_min <= 0 marks the boundary.
  if (!(min_eigenvalue(p) > 0.0)) {
    throw DomainError("omd_step: p is not in the cone interior");
  }
  return exp_element(lowner([](double t) { return std::log(t); }, p) - eta * m);
}

AlgebraElement omd_step(const AlgebraElement& p, const AlgebraElement& m,
                        double eta) {
  return bregman_project_trace_one(omd_intermediate(p, m, eta));
}

double ScaledWeight::log_trace() const {
  return log_scale + std::log(trace(shifted));
}

AlgebraElement ScaledWeight::normalized() const {
  return shifted / trace(shifted);
}

AlgebraElement ScaledWeight::value() const {
  return std::exp(log_scale) * shifted;
}

ScaledWeight unnormalized_weight(const AlgebraElement& cumulative_loss,
                                 double eta) {
  const AlgebraElement scaled = -eta * cumulative_loss;
  const double shift = max_eigenvalue(scaled);
  return {exp_element(scaled - shift * identity(scaled.structure_ptr())),
          shift};
}

}  // namespace symcone
