#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "symcone/random.hpp"

namespace symcone {

// Linearly separable data with all labels folded to +1. Rows of `points` are
// the data; every row has norm <= 1 and points * direction >= margin.
struct SvmInstance {
  Eigen::MatrixXd points;
  Eigen::VectorXd direction;
  // min_i (points * direction)_i, the margin along the generating direction.
  double generated_margin = 0.0;
};

// Draws the direction uniformly on the sphere, then rejection-samples points
// uniform in the unit ball with |direction . z| >= margin, flipping signs so
// that every point lies on the positive side. Requires 0 < margin < 1,
// n >= 1, d >= 1.
SvmInstance generate_svm_instance(int n, int d, double margin, Rng& rng);

// m(x) = min_i (A x)_i, which is also min over the simplex of p^T A x.
double margin(const Eigen::MatrixXd& points, const Eigen::VectorXd& x);

// Geometric margin min_i (A x)_i / |x|_2; 0 for x = 0.
double geometric_margin(const Eigen::MatrixXd& points, const Eigen::VectorXd& x);

// max over the unit ball of p^T A x, i.e. |A^T p|_2.
double best_ball_response(const Eigen::MatrixXd& points,
                          const Eigen::VectorXd& p);

struct SvmGameOptions {
  // Keep every p_t (n doubles per step) in the trace.
  bool record_distributions = false;
  // Fill the running margin and gap columns (O(n d) per step).
  bool record_running_metrics = true;
};

struct SvmGameStep {
  double utility;          // p_t^T A x_t
  double running_margin;   // m(x_bar_t)
  double running_gap;      // |A^T p_bar_t| - m(x_bar_t)
};

struct SvmGameTrace {
  std::int64_t horizon = 0;
  double eta_simplex = 0.0;
  double eta_ball = 0.0;
  std::vector<Eigen::VectorXd> classifiers;     // x_t
  std::vector<Eigen::VectorXd> distributions;   // p_t, when recorded
  std::vector<SvmGameStep> steps;
  Eigen::VectorXd mean_distribution;            // p_bar
  Eigen::VectorXd mean_classifier;              // x_bar
  double mean_utility = 0.0;                    // (1/T) sum_t p_t^T A x_t
  double attained_margin = 0.0;                 // m(x_bar) = min_p p^T A x_bar
  double geometric_margin = 0.0;                // m(x_bar / |x_bar|)
  double best_response_value = 0.0;             // max_x p_bar^T A x
  double nash_gap = 0.0;
  // Largest |A^T p_t|_2 and |(A x_t)_i| seen; both are <= 1 on valid data.
  double max_ball_loss_norm = 0.0;
  double max_simplex_loss = 0.0;
};

// Runs MWU (simplex player, stepsize sqrt(ln n / T), losses A x_t) against the
// ball learner (stepsize sqrt(ln 2 / T), losses -A^T p_t) for T rounds.
SvmGameTrace svm_game_run(const SvmInstance& instance, std::int64_t horizon,
                          const SvmGameOptions& options = {});

// epsilon = 2 / sqrt(T) * (sqrt(ln n) + sqrt(ln 2)).
double svm_epsilon(std::int64_t horizon, int n);

// ceil(4 (sqrt(ln n) + sqrt(2 ln 2))^2 / eps^2).
std::int64_t required_horizon(double eps, int n);

}  // namespace symcone
