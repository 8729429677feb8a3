#include "symcone/regret.hpp"

#include <numeric>
#include <stdexcept>

#include "symcone/spectral.hpp"

namespace symcone {

RegretLedger::RegretLedger(StructurePtr structure)
    : total_loss_(std::move(structure)) {}

void RegretLedger::record(const AlgebraElement& m, const AlgebraElement& p) {
  require_same_structure(total_loss_, m, "regret_update");
  const double loss = inner(m, p);
  losses_.push_back(loss);
  algorithm_loss_ += loss;
  total_loss_ += m;
  best_ = min_eigenvalue(total_loss_);
}

double RegretLedger::recompute_regret() const {
  const double alg = std::accumulate(losses_.begin(), losses_.end(), 0.0);
  return alg - (losses_.empty() ? 0.0 : min_eigenvalue(total_loss_));
}

RegretLedger regret_update(RegretLedger ledger, const AlgebraElement& m,
                           const AlgebraElement& p) {
  ledger.record(m, p);
  return ledger;
}

BallRegretLedger::BallRegretLedger(int dim)
    : total_loss_(Eigen::VectorXd::Zero(dim)) {}

void BallRegretLedger::record(const Eigen::VectorXd& m,
                              const Eigen::VectorXd& b) {
  if (m.size() != total_loss_.size() || b.size() != total_loss_.size()) {
    throw std::invalid_argument("BallRegretLedger: dimension mismatch");
  }
  const double loss = m.dot(b);
  losses_.push_back(loss);
  algorithm_loss_ += loss;
  total_loss_ += m;
}

double BallRegretLedger::recompute_regret() const {
  const double alg = std::accumulate(losses_.begin(), losses_.end(), 0.0);
  return alg + total_loss_.norm();
}

}  // namespace symcone
