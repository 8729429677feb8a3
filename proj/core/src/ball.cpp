#include "symcone/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace symcone {

Eigen::VectorXd nexp(const Eigen::VectorXd& x) {
  const double n = x.stableNorm();
  if (n == 0.0) return Eigen::VectorXd::Zero(x.size());
  // tanh rounds to 1 for n > ~18; the cap keeps |2 nexp(x)| < 1 after rounding.
  constexpr double kCap = 1.0 - 16 * std::numeric_limits<double>::epsilon();
  const double t = std::min(std::tanh(n), kCap);
  return (0.5 * t / n) * x;
}

BallState BallState::initial(int dim, StepsizePolicy policy) {
  if (dim < 1) throw std::invalid_argument("ball dimension must be positive");
  BallState s;
  s.policy_ = policy;
  s.epoch_loss_ = Eigen::VectorXd::Zero(dim);
  s.total_loss_ = Eigen::VectorXd::Zero(dim);
  s.iterate_ = Eigen::VectorXd::Zero(dim);
  if (const auto* fixed = std::get_if<FixedStepsize>(&policy)) {
    if (!(fixed->eta > 0.0)) {
      throw std::invalid_argument("fixed stepsize must be positive");
    }
    s.eta_ = fixed->eta;
  } else {
    const DoublingEpoch first = doubling_schedule(1, 2);
    s.eta_ = first.eta;
    s.epoch_ = first.epoch;
  }
  return s;
}

BallState scmwu_ball_step(const BallState& state, const Eigen::VectorXd& m) {
  if (m.size() != state.iterate_.size()) {
    throw std::invalid_argument("scmwu_ball_step: dimension mismatch");
  }
  BallState next = state;
  if (m.norm() > 1.0 + 1e-9) ++next.unbounded_losses_;
  next.step_ += 1;
  next.total_loss_ += m;
  next.epoch_loss_ += m;
  if (std::holds_alternative<DoublingStepsize>(state.policy_)) {
    const DoublingEpoch upcoming = doubling_schedule(next.step_ + 1, 2);
    if (upcoming.epoch != state.epoch_) {
      next.epoch_loss_.setZero();
      next.epoch_ = upcoming.epoch;
      next.eta_ = upcoming.eta;
    }
  }
  next.iterate_ = 2.0 * nexp(-next.eta_ * next.epoch_loss_);
  return next;
}

Eigen::VectorXd ogd_ball_step(const Eigen::VectorXd& b, const Eigen::VectorXd& m,
                              double eta) {
  Eigen::VectorXd v = b - eta * m;
  const double n = v.norm();
  if (n > 1.0) v /= n;
  return v;
}

}  // namespace symcone
