#pragma once

#include <cstdint>
#include <variant>

#include "symcone/element.hpp"

namespace symcone {

struct FixedStepsize {
  double eta;
};
// Epoch i covers steps 2^i .. 2^{i+1}-1 and uses eta_i = sqrt(2^-i ln r);
// the learner restarts from e/r at every epoch boundary.
struct DoublingStepsize {};
using StepsizePolicy = std::variant<FixedStepsize, DoublingStepsize>;

struct DoublingEpoch {
  int epoch;
  double eta;
};

// Epoch and stepsize of 1-based step t for a learner of the given rank
// (rank 2 for the ball learner). Requires t >= 1 and rank >= 2.
DoublingEpoch doubling_schedule(std::int64_t t, int rank);

// sqrt(ln r / T), the stepsize minimizing eta T + ln(r) / eta.
double optimized_stepsize(std::int64_t horizon, int rank);

enum class BoundMode { kOptimized, kDoubling };

// kOptimized: 2 sqrt(t ln r).
// kDoubling:  2 sqrt(2) / (sqrt(2) - 1) * sqrt(t ln r).
// The ball learner uses rank 2.
double theoretical_bound(std::int64_t t, int rank, BoundMode mode);

// True when -e <= m <= e holds within tol.
bool loss_is_bounded(const AlgebraElement& m, double tol = 1e-9);

// Snapshot of a symmetric-cone multiplicative-weights learner after t losses.
// The iterate is recomputed from the (per-epoch) cumulative loss on every
// step: p_{t+1} = exp(-eta L) / tr(exp(-eta L)).
class LearnerState {
 public:
  static LearnerState initial(StructurePtr structure, StepsizePolicy policy);

  const ConeStructure& structure() const { return iterate_.structure(); }
  const StructurePtr& structure_ptr() const { return iterate_.structure_ptr(); }
  // Action for the next round, p_{t+1}.
  const AlgebraElement& iterate() const { return iterate_; }
  // Sum of the losses in the current epoch (all losses for a fixed stepsize).
  const AlgebraElement& cumulative_loss() const { return epoch_loss_; }
  const AlgebraElement& total_loss() const { return total_loss_; }
  std::int64_t step() const { return step_; }
  // Stepsize that produced iterate().
  double eta() const { return eta_; }
  int epoch() const { return epoch_; }
  const StepsizePolicy& policy() const { return policy_; }
  // Number of losses that violated -e <= m <= e. The update stays defined but
  // the regret guarantee no longer applies.
  std::int64_t unbounded_losses() const { return unbounded_losses_; }

 private:
  LearnerState(StepsizePolicy policy, AlgebraElement zero, AlgebraElement p);

  friend LearnerState scmwu_step(const LearnerState& state,
                                 const AlgebraElement& m);

  StepsizePolicy policy_;
  AlgebraElement epoch_loss_;
  AlgebraElement total_loss_;
  AlgebraElement iterate_;
  std::int64_t step_ = 0;
  double eta_ = 0.0;
  int epoch_ = 0;
  std::int64_t unbounded_losses_ = 0;
};

LearnerState scmwu_step(const LearnerState& state, const AlgebraElement& m);

// Unconstrained FTRL minimizer of Phi(x) + eta <L, x>: exp(-eta L - e).
// Not shifted; overflows for very negative eta L.
AlgebraElement ftrl_unconstrained(const AlgebraElement& cumulative_loss,
                                  double eta);

// FTRL over the trace-one slice, computed as the Bregman projection of the
// (max-eigenvalue shifted) unconstrained minimizer.
AlgebraElement ftrl_iterate(const AlgebraElement& cumulative_loss, double eta);

// OMD intermediate: exp(ln p - eta m).
AlgebraElement omd_intermediate(const AlgebraElement& p, const AlgebraElement& m,
                                double eta);
// One mirror-descent step: the projection of omd_intermediate onto the slice.
// Requires lambda_min(p) > 0; unlike ln_element, no relative margin applies.
AlgebraElement omd_step(const AlgebraElement& p, const AlgebraElement& m,
                        double eta);

// w = exp(-eta L) held as exp(log_scale) * shifted, with
// shifted = exp(-eta L - log_scale e) and log_scale = lambda_max(-eta L).
struct ScaledWeight {
  AlgebraElement shifted;
  double log_scale;

  double log_trace() const;
  AlgebraElement normalized() const;
  // Materializes exp(log_scale) * shifted; may overflow.
  AlgebraElement value() const;
};

ScaledWeight unnormalized_weight(const AlgebraElement& cumulative_loss,
                                 double eta);

}  // namespace symcone
