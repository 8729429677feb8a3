#include "symcone/games.hpp"

#include <cmath>
#include <stdexcept>

#include "symcone/ball.hpp"
#include "symcone/learners.hpp"

namespace symcone {

SvmInstance generate_svm_instance(int n, int d, double margin_value, Rng& rng) {
  if (n < 1 || d < 1) {
    throw std::invalid_argument("generate_svm_instance: n and d must be positive");
  }
  if (!(margin_value > 0.0 && margin_value < 1.0)) {
    throw std::invalid_argument("generate_svm_instance: margin must be in (0, 1)");
  }
  SvmInstance inst;
  inst.direction = random_unit_vector(d, rng);
  inst.points.resize(n, d);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd z;
    double proj = 0.0;
    do {
      z = random_ball_vector(d, rng);
      proj = inst.direction.dot(z);
    } while (std::abs(proj) < margin_value);
    if (proj < 0.0) z = -z;
    inst.points.row(i) = z.transpose();
  }
  inst.generated_margin = margin(inst.points, inst.direction);
  return inst;
}

double margin(const Eigen::MatrixXd& points, const Eigen::VectorXd& x) {
  return (points * x).minCoeff();
}

double best_ball_response(const Eigen::MatrixXd& points,
                          const Eigen::VectorXd& p) {
  return (points.transpose() * p).norm();
}

SvmGameTrace svm_game_run(const SvmInstance& instance, std::int64_t horizon,
                          const SvmGameOptions& options) {
  if (horizon < 1) throw std::invalid_argument("svm_game_run: T must be >= 1");
  const Eigen::MatrixXd& a = instance.points;
  const int n = static_cast<int>(a.rows());
  const int d = static_cast<int>(a.cols());

  SvmGameTrace trace;
  trace.horizon = horizon;
  trace.eta_simplex = optimized_stepsize(horizon, std::max(n, 2));
  trace.eta_ball = optimized_stepsize(horizon, 2);

  const StructurePtr simplex = orthant(n);
  LearnerState p_player =
      LearnerState::initial(simplex, FixedStepsize{trace.eta_simplex});
  BallState x_player = BallState::initial(d, FixedStepsize{trace.eta_ball});

  Eigen::VectorXd p_sum = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd x_sum = Eigen::VectorXd::Zero(d);
  double utility_sum = 0.0;
  trace.classifiers.reserve(horizon);
  trace.steps.reserve(horizon);

  for (std::int64_t t = 1; t <= horizon; ++t) {
    const Eigen::VectorXd p = p_player.iterate().storage();
    const Eigen::VectorXd x = x_player.iterate();
    const Eigen::VectorXd ax = a * x;
    const Eigen::VectorXd atp = a.transpose() * p;
    const double utility = p.dot(ax);

    trace.max_simplex_loss = std::max(trace.max_simplex_loss, ax.cwiseAbs().maxCoeff());
    trace.max_ball_loss_norm = std::max(trace.max_ball_loss_norm, atp.norm());

    p_sum += p;
    x_sum += x;
    utility_sum += utility;
    trace.classifiers.push_back(x);
    if (options.record_distributions) trace.distributions.push_back(p);

    SvmGameStep step{utility, 0.0, 0.0};
    if (options.record_running_metrics) {
      const double inv_t = 1.0 / static_cast<double>(t);
      step.running_margin = margin(a, x_sum * inv_t);
      step.running_gap =
          best_ball_response(a, p_sum * inv_t) - step.running_margin;
    }
    trace.steps.push_back(step);

    p_player = scmwu_step(p_player, AlgebraElement(simplex, ax));
    x_player = scmwu_ball_step(x_player, -atp);
  }

  const double inv_T = 1.0 / static_cast<double>(horizon);
  trace.mean_distribution = p_sum * inv_T;
  trace.mean_classifier = x_sum * inv_T;
  trace.mean_utility = utility_sum * inv_T;
  trace.attained_margin = margin(a, trace.mean_classifier);
  trace.geometric_margin = geometric_margin(a, trace.mean_classifier);
  trace.best_response_value = best_ball_response(a, trace.mean_distribution);
  trace.nash_gap = trace.best_response_value - trace.attained_margin;
  return trace;
}

double geometric_margin(const Eigen::MatrixXd& points, const Eigen::VectorXd& x) {
  const double norm = x.norm();
  if (norm == 0.0) return 0.0;
  return margin(points, x) / norm;
}

double svm_epsilon(std::int64_t horizon, int n) {
  return 2.0 / std::sqrt(static_cast<double>(horizon)) *
         (std::sqrt(std::log(static_cast<double>(n))) + std::sqrt(std::log(2.0)));
}

std::int64_t required_horizon(double eps, int n) {
  if (!(eps > 0.0)) throw std::invalid_argument("required_horizon: eps must be > 0");
  if (n < 2) throw std::invalid_argument("required_horizon: n must be >= 2");
  const double root = std::sqrt(std::log(static_cast<double>(n))) +
                      std::sqrt(2.0 * std::log(2.0));
  return static_cast<std::int64_t>(std::ceil(4.0 * root * root / (eps * eps)));
}

}  // namespace symcone
