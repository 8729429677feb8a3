#pragma once

#include <vector>

#include <Eigen/Dense>

#include "symcone/element.hpp"

namespace symcone {

// Regret against the best fixed point of the trace-one slice,
//   sum_t <m_t, p_t> - min_{tr u = 1, u in K} <sum_t m_t, u>
// where the minimum equals lambda_min(sum_t m_t).
class RegretLedger {
 public:
  explicit RegretLedger(StructurePtr structure);

  // Records the round (m_t, p_t); p_t is the action played before m_t.
  void record(const AlgebraElement& m, const AlgebraElement& p);

  const std::vector<double>& instantaneous_losses() const { return losses_; }
  double algorithm_loss() const { return algorithm_loss_; }
  double best_in_hindsight() const { return best_; }
  double regret() const { return algorithm_loss_ - best_; }
  const AlgebraElement& total_loss() const { return total_loss_; }
  std::int64_t rounds() const { return static_cast<std::int64_t>(losses_.size()); }

  // Recomputes the regret from the recorded lists; agrees with regret().
  double recompute_regret() const;

 private:
  std::vector<double> losses_;
  double algorithm_loss_ = 0.0;
  double best_ = 0.0;
  AlgebraElement total_loss_;
};

RegretLedger regret_update(RegretLedger ledger, const AlgebraElement& m,
                           const AlgebraElement& p);

// Ball version: the best fixed point of the unit ball has loss -|sum_t m_t|_2.
class BallRegretLedger {
 public:
  explicit BallRegretLedger(int dim);

  void record(const Eigen::VectorXd& m, const Eigen::VectorXd& b);

  const std::vector<double>& instantaneous_losses() const { return losses_; }
  double algorithm_loss() const { return algorithm_loss_; }
  double best_in_hindsight() const { return -total_loss_.norm(); }
  double regret() const { return algorithm_loss_ - best_in_hindsight(); }
  const Eigen::VectorXd& total_loss() const { return total_loss_; }
  double recompute_regret() const;

 private:
  std::vector<double> losses_;
  double algorithm_loss_ = 0.0;
  Eigen::VectorXd total_loss_;
};

}  // namespace symcone
