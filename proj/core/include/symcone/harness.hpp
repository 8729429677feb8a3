#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcone/cone.hpp"
#include "symcone/learners.hpp"
#include "symcone/random.hpp"

namespace symcone::harness {

enum class ExperimentKind {
  kRegretCone,
  kRegretBall,
  kCompareOgd,
  kSvmGame,
  kLevelCurves,
};

ExperimentKind parse_kind(const std::string& name);
std::string to_string(ExperimentKind kind);

enum class StepsizeMode { kDoubling, kOptimized };

// One JSON document per run. Identical config and seed give identical output
// files. Fields not used by an experiment kind are ignored by it.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kRegretCone;
  // Cone spec or preset name (regret_cone).
  std::string structure = "fig2-right";
  // Ball dimensions (regret_ball, compare_ogd) or data dimensions (svm_game).
  std::vector<int> dims = {2};
  std::int64_t horizon = 10000;
  // svm_game horizon grid; empty means {horizon}.
  std::vector<std::int64_t> horizons;
  int instances = 100;
  std::optional<std::uint64_t> seed;
  StepsizeMode stepsize = StepsizeMode::kDoubling;
  std::filesystem::path out_dir = "out";
  // Feed all-zero losses (regret_cone, regret_ball, compare_ogd).
  bool zero_loss = false;
  // Write one CSV per instance in addition to the aggregate.
  bool write_instances = true;
  // level_curves
  int grid = 101;
  std::vector<double> reference = {0.21, 0.28, 0.5};
  // svm_game
  int points = 1000;
  double margin = 0.1;

  std::uint64_t require_seed() const;
};

// Throws ConfigError on unknown keys, wrong types, or out-of-range values.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig load_config(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Regret experiments

struct RegretRow {
  std::int64_t t;
  int epoch;
  double eta;
  double inst_loss;
  double cum_loss;
  double best_hindsight;
  double regret;
  double bound_optimized;
  double bound_doubling;
};

struct RegretRun {
  std::uint64_t stream_seed = 0;
  std::vector<RegretRow> rows;  // empty unless rows were kept
  std::vector<double> regret;   // regret(t), t = 1..T
  // Bound in force for the chosen stepsize mode at each t.
  std::vector<double> active_bound;
  // max_t |ledger regret - regret recomputed from the lists|.
  double ledger_gap = 0.0;
  std::int64_t unbounded_losses = 0;
};

struct RegretBatch {
  std::string label;
  int rank = 0;
  std::vector<RegretRun> runs;
  std::vector<double> max_regret;  // over runs, per t
  std::vector<double> bound;       // active bound per t
  std::int64_t violations = 0;     // (run, t) pairs with regret > bound
  double max_ledger_gap = 0.0;
  std::int64_t unbounded_losses = 0;
};

// Active bound: the doubling bound, or eta t + ln(r) / eta for a fixed
// optimized stepsize (which equals 2 sqrt(T ln r) at t = T).
RegretRun run_cone_sequence(const StructurePtr& structure, StepsizeMode mode,
                            std::int64_t horizon, Rng& rng, bool zero_loss,
                            bool keep_rows);
RegretRun run_ball_sequence(int dim, StepsizeMode mode, std::int64_t horizon,
                            Rng& rng, bool zero_loss, bool keep_rows);

RegretBatch run_regret_cone(const ExperimentConfig& config, bool keep_rows);
std::vector<RegretBatch> run_regret_ball(const ExperimentConfig& config,
                                         bool keep_rows);

// Writes <out>/<label>/instance_NNN.csv (if rows were kept) and
// <out>/<label>/aggregate.csv.
void write_regret_batch(const RegretBatch& batch,
                        const std::filesystem::path& out_dir);

// ---------------------------------------------------------------------------
// SCMWU-ball vs OGD on shared losses

struct CompareRun {
  std::uint64_t stream_seed = 0;
  std::vector<double> regret_scmwu_ball;
  std::vector<double> regret_ogd;
  // FNV-1a hashes of the loss bytes each learner consumed.
  std::uint64_t scmwu_stream_hash = 0;
  std::uint64_t ogd_stream_hash = 0;
};

struct CompareBatch {
  int dim = 0;
  double eta_scmwu_ball = 0.0;
  double eta_ogd = 0.0;
  std::vector<CompareRun> runs;
};

CompareBatch run_compare_ogd(const ExperimentConfig& config);
void write_compare_batch(const CompareBatch& batch,
                         const std::filesystem::path& out_dir,
                         bool write_instances);

// ---------------------------------------------------------------------------
// Entropy and Bregman level curves on the SOC_2 trace-one slice

struct LevelPoint {
  double u1;
  double u2;
  std::optional<double> phi;
  std::optional<double> bregman;
};

// The slice point (u1, u2, 1/2); empty values off the interior of the slice.
LevelPoint level_curve_point(double u1, double u2,
                             const std::vector<double>& reference);
std::vector<LevelPoint> run_level_curves(const ExperimentConfig& config);
void write_level_curves(const std::vector<LevelPoint>& points,
                        const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// SVM game batches

struct SvmInstanceResult {
  int index = 0;
  std::uint64_t stream_seed = 0;
  double generated_margin = 0.0;
  double attained_margin = 0.0;   // m(x_bar)
  double geometric_margin = 0.0;  // m(x_bar / |x_bar|)
  double ratio = 0.0;             // geometric / generated
  double additive_error = 0.0;    // generated - geometric
  double mean_utility = 0.0;
  double best_response_value = 0.0;
  double nash_gap = 0.0;
  // Slack of the two sides of the sandwich chain (>= 0 when it holds).
  double sandwich_lower_slack = 0.0;
  double sandwich_upper_slack = 0.0;
};

struct SvmCell {
  int dim = 0;
  std::int64_t horizon = 0;
  int points = 0;
  std::vector<SvmInstanceResult> instances;
  double mean_ratio = 0.0;
  double worst_ratio = 0.0;
  double mean_eps = 0.0;
  double worst_eps = 0.0;
  double epsilon_bound = 0.0;
  std::int64_t sandwich_violations = 0;
};

// Instance i of dimension d is generated from stream (seed, d, i), so the same
// data are reused across horizons.
std::vector<SvmCell> run_svm_game(const ExperimentConfig& config,
                                  const std::filesystem::path* trace_dir);
nlohmann::json svm_cell_summary(const SvmCell& cell);
void write_svm_summaries(const std::vector<SvmCell>& cells,
                         const std::filesystem::path& out_dir);

// ---------------------------------------------------------------------------

// Randomized invariant checks; prints one line per suite. Returns true when all
// suites pass.
bool run_selftest(std::uint64_t seed, int cases, std::ostream& out);

// Runs the experiment named by config.kind and writes its files. Returns the
// process exit code: 0 on success, 1 if a checked invariant failed.
int run_experiment(const ExperimentConfig& config, std::ostream& log);

}  // namespace symcone::harness
