#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "symcone/learners.hpp"

namespace symcone {

// Normalized exponential map R^d -> interior of the half-unit ball:
//   nexp(x) = tanh(|x|) / 2 * x / |x|,  nexp(0) = 0.
// This is the closed form of the frame-weighted expression
//   e^{|x|} / (e^{|x|} + e^{-|x|}) * x / (2|x|)
//     + e^{-|x|} / (e^{|x|} + e^{-|x|}) * (-x / (2|x|)),
// which loses precision for small |x| when evaluated as written.
Eigen::VectorXd nexp(const Eigen::VectorXd& x);

// Multiplicative-weights learner over the unit ball, obtained from the SOC
// learner with lifted losses (m, 0): b_{t+1} = 2 nexp(-eta sum_i m_i).
class BallState {
 public:
  static BallState initial(int dim, StepsizePolicy policy);

  int dim() const { return static_cast<int>(iterate_.size()); }
  const Eigen::VectorXd& iterate() const { return iterate_; }
  const Eigen::VectorXd& cumulative_loss() const { return epoch_loss_; }
  const Eigen::VectorXd& total_loss() const { return total_loss_; }
  std::int64_t step() const { return step_; }
  double eta() const { return eta_; }
  int epoch() const { return epoch_; }
  // Losses with |m|_2 > 1 + 1e-9.
  std::int64_t unbounded_losses() const { return unbounded_losses_; }

 private:
  friend BallState scmwu_ball_step(const BallState& state,
                                   const Eigen::VectorXd& m);

  StepsizePolicy policy_;
  Eigen::VectorXd epoch_loss_;
  Eigen::VectorXd total_loss_;
  Eigen::VectorXd iterate_;
  std::int64_t step_ = 0;
  double eta_ = 0.0;
  int epoch_ = 0;
  std::int64_t unbounded_losses_ = 0;
};

BallState scmwu_ball_step(const BallState& state, const Eigen::VectorXd& m);

// Projected online gradient descent on the unit ball:
// v = b - eta m, result v / max(1, |v|_2).
Eigen::VectorXd ogd_ball_step(const Eigen::VectorXd& b, const Eigen::VectorXd& m,
                              double eta);

}  // namespace symcone
