#include "symcone/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "symcone/ball.hpp"
#include "symcone/csv.hpp"
#include "symcone/divergence.hpp"
#include "symcone/errors.hpp"
#include "symcone/games.hpp"
#include "symcone/regret.hpp"
#include "symcone/serialize.hpp"
#include "symcone/spectral.hpp"

namespace symcone::harness {
namespace {

constexpr double kLedgerTolerance = 1e-9;
constexpr double kSandwichTolerance = 1e-9;

std::string normalize_kind(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return seed * 0x100000001b3ULL + salt * 0x9e3779b97f4a7c15ULL;
}

std::string pad_index(int i) {
  std::ostringstream os;
  os << std::setw(3) << std::setfill('0') << i;
  return os.str();
}

std::string label_for_structure(const std::string& spec,
                                const ConeStructure& structure) {
  for (const auto& name : ConeStructure::preset_names()) {
    if (spec == name) return name;
  }
  std::string label = structure.to_string();
  std::replace(label.begin(), label.end(), ':', '-');
  std::replace(label.begin(), label.end(), ',', '_');
  return label;
}

void fnv1a(std::uint64_t& h, const Eigen::VectorXd& v) {
  const auto* bytes = reinterpret_cast<const unsigned char*>(v.data());
  for (std::size_t i = 0; i < static_cast<std::size_t>(v.size()) * sizeof(double);
       ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
}

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

bool is_checkpoint(std::int64_t t, std::int64_t horizon) {
  return t == horizon || (t & (t - 1)) == 0;
}

template <class T>
T get_field(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace

ExperimentKind parse_kind(const std::string& name) {
  const std::string k = normalize_kind(name);
  if (k == "regret_cone") return ExperimentKind::kRegretCone;
  if (k == "regret_ball") return ExperimentKind::kRegretBall;
  if (k == "compare_ogd") return ExperimentKind::kCompareOgd;
  if (k == "svm_game") return ExperimentKind::kSvmGame;
  if (k == "level_curves") return ExperimentKind::kLevelCurves;
  throw ConfigError("unknown experiment kind '" + name + "'");
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kRegretCone: return "regret_cone";
    case ExperimentKind::kRegretBall: return "regret_ball";
    case ExperimentKind::kCompareOgd: return "compare_ogd";
    case ExperimentKind::kSvmGame: return "svm_game";
    case ExperimentKind::kLevelCurves: return "level_curves";
  }
  return "?";
}

std::uint64_t ExperimentConfig::require_seed() const {
  if (!seed) throw ConfigError("a seed is required (config \"seed\" or --seed)");
  return *seed;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known = {
      "kind",      "structure", "dims",      "dim",       "horizon",
      "horizons",  "instances", "seed",      "stepsize",  "out",
      "out_dir",   "zero_loss", "write_instances",        "grid",
      "reference", "points",    "margin"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  ExperimentConfig c;
  if (j.contains("kind")) c.kind = parse_kind(get_field<std::string>(j, "kind"));
  if (j.contains("structure")) {
    const auto& s = j.at("structure");
    c.structure = s.is_string() ? s.get<std::string>()
                                : structure_from_json(s)->to_string();
  }
  if (j.contains("dim")) c.dims = {get_field<int>(j, "dim")};
  if (j.contains("dims")) {
    const auto& d = j.at("dims");
    c.dims = d.is_array() ? get_field<std::vector<int>>(j, "dims")
                          : std::vector<int>{get_field<int>(j, "dims")};
  }
  if (j.contains("horizon")) c.horizon = get_field<std::int64_t>(j, "horizon");
  if (j.contains("horizons")) {
    c.horizons = get_field<std::vector<std::int64_t>>(j, "horizons");
  }
  if (j.contains("instances")) c.instances = get_field<int>(j, "instances");
  if (j.contains("seed")) c.seed = get_field<std::uint64_t>(j, "seed");
  if (j.contains("stepsize")) {
    const auto mode = get_field<std::string>(j, "stepsize");
    if (mode == "doubling") {
      c.stepsize = StepsizeMode::kDoubling;
    } else if (mode == "optimized") {
      c.stepsize = StepsizeMode::kOptimized;
    } else {
      throw ConfigError("stepsize must be \"doubling\" or \"optimized\"");
    }
  }
  if (j.contains("out")) c.out_dir = get_field<std::string>(j, "out");
  if (j.contains("out_dir")) c.out_dir = get_field<std::string>(j, "out_dir");
  if (j.contains("zero_loss")) c.zero_loss = get_field<bool>(j, "zero_loss");
  if (j.contains("write_instances")) {
    c.write_instances = get_field<bool>(j, "write_instances");
  }
  if (j.contains("grid")) c.grid = get_field<int>(j, "grid");
  if (j.contains("reference")) {
    c.reference = get_field<std::vector<double>>(j, "reference");
  }
  if (j.contains("points")) c.points = get_field<int>(j, "points");
  if (j.contains("margin")) c.margin = get_field<double>(j, "margin");

  if (c.horizon < 1) throw ConfigError("horizon must be >= 1");
  for (auto t : c.horizons) {
    if (t < 1) throw ConfigError("horizons must be >= 1");
  }
  if (c.instances < 1) throw ConfigError("instances must be >= 1");
  if (c.dims.empty()) throw ConfigError("dims must not be empty");
  for (int d : c.dims) {
    if (d < 1) throw ConfigError("dimensions must be >= 1");
  }
  if (c.grid < 10) throw ConfigError("grid resolution must be >= 10");
  if (c.reference.size() != 3) {
    throw ConfigError("reference must be a SOC_2 point (x1, x2, s)");
  }
  if (c.points < 2) throw ConfigError("points must be >= 2");
  if (!(c.margin > 0.0 && c.margin < 1.0)) {
    throw ConfigError("margin must lie in (0, 1)");
  }
  // Validate the structure spec early so bad input is a config error.
  if (c.kind == ExperimentKind::kRegretCone) ConeStructure::parse(c.structure);
  return c;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j = {
      {"kind", to_string(c.kind)},
      {"structure", c.structure},
      {"dims", c.dims},
      {"horizon", c.horizon},
      {"horizons", c.horizons},
      {"instances", c.instances},
      {"stepsize", c.stepsize == StepsizeMode::kDoubling ? "doubling" : "optimized"},
      {"out_dir", c.out_dir.string()},
      {"zero_loss", c.zero_loss},
      {"write_instances", c.write_instances},
      {"grid", c.grid},
      {"reference", c.reference},
      {"points", c.points},
      {"margin", c.margin},
  };
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

// ---------------------------------------------------------------------------

RegretRun run_cone_sequence(const StructurePtr& structure, StepsizeMode mode,
                            std::int64_t horizon, Rng& rng, bool zero_loss,
                            bool keep_rows) {
  const int r = structure->rank();
  const double fixed_eta = optimized_stepsize(horizon, std::max(r, 2));
  const StepsizePolicy policy =
      mode == StepsizeMode::kDoubling ? StepsizePolicy{DoublingStepsize{}}
                                      : StepsizePolicy{FixedStepsize{fixed_eta}};
  LearnerState learner = LearnerState::initial(structure, policy);
  RegretLedger ledger(structure);
  const AlgebraElement zero(structure);

  RegretRun run;
  run.regret.reserve(horizon);
  run.active_bound.reserve(horizon);
  if (keep_rows) run.rows.reserve(horizon);
  const double log_r = std::log(static_cast<double>(std::max(r, 2)));

  for (std::int64_t t = 1; t <= horizon; ++t) {
    const AlgebraElement m = zero_loss ? zero : random_bounded_loss(structure, rng);
    const double eta = learner.eta();
    const int epoch = learner.epoch();
    ledger.record(m, learner.iterate());
    learner = scmwu_step(learner, m);

    const double regret = ledger.regret();
    const double bound_opt = theoretical_bound(t, std::max(r, 2), BoundMode::kOptimized);
    const double bound_dbl = theoretical_bound(t, std::max(r, 2), BoundMode::kDoubling);
    const double active = mode == StepsizeMode::kDoubling
                              ? bound_dbl
                              : fixed_eta * static_cast<double>(t) + log_r / fixed_eta;
    run.regret.push_back(regret);
    run.active_bound.push_back(active);
    if (is_checkpoint(t, horizon)) {
      run.ledger_gap =
          std::max(run.ledger_gap, std::abs(regret - ledger.recompute_regret()));
    }
    if (keep_rows) {
      run.rows.push_back({t, epoch, eta, ledger.instantaneous_losses().back(),
                          ledger.algorithm_loss(), ledger.best_in_hindsight(),
                          regret, bound_opt, bound_dbl});
    }
  }
  run.unbounded_losses = learner.unbounded_losses();
  return run;
}

RegretRun run_ball_sequence(int dim, StepsizeMode mode, std::int64_t horizon,
                            Rng& rng, bool zero_loss, bool keep_rows) {
  const double fixed_eta = optimized_stepsize(horizon, 2);
  const StepsizePolicy policy =
      mode == StepsizeMode::kDoubling ? StepsizePolicy{DoublingStepsize{}}
                                      : StepsizePolicy{FixedStepsize{fixed_eta}};
  BallState learner = BallState::initial(dim, policy);
  BallRegretLedger ledger(dim);
  const double log2 = std::log(2.0);

  RegretRun run;
  run.regret.reserve(horizon);
  run.active_bound.reserve(horizon);
  if (keep_rows) run.rows.reserve(horizon);

  for (std::int64_t t = 1; t <= horizon; ++t) {
    const Eigen::VectorXd m =
        zero_loss ? Eigen::VectorXd::Zero(dim) : random_ball_vector(dim, rng);
    const double eta = learner.eta();
    const int epoch = learner.epoch();
    ledger.record(m, learner.iterate());
    learner = scmwu_ball_step(learner, m);

    const double regret = ledger.regret();
    const double bound_opt = theoretical_bound(t, 2, BoundMode::kOptimized);
    const double bound_dbl = theoretical_bound(t, 2, BoundMode::kDoubling);
    const double active = mode == StepsizeMode::kDoubling
                              ? bound_dbl
                              : fixed_eta * static_cast<double>(t) + log2 / fixed_eta;
    run.regret.push_back(regret);
    run.active_bound.push_back(active);
    if (is_checkpoint(t, horizon)) {
      run.ledger_gap =
          std::max(run.ledger_gap, std::abs(regret - ledger.recompute_regret()));
    }
    if (keep_rows) {
      run.rows.push_back({t, epoch, eta, ledger.instantaneous_losses().back(),
                          ledger.algorithm_loss(), ledger.best_in_hindsight(),
                          regret, bound_opt, bound_dbl});
    }
  }
  run.unbounded_losses = learner.unbounded_losses();
  return run;
}

namespace {

void aggregate(RegretBatch& batch, std::int64_t horizon) {
  batch.max_regret.assign(horizon, -std::numeric_limits<double>::infinity());
  batch.bound.assign(horizon, 0.0);
  for (const RegretRun& run : batch.runs) {
    for (std::int64_t t = 0; t < horizon; ++t) {
      batch.max_regret[t] = std::max(batch.max_regret[t], run.regret[t]);
      batch.bound[t] = run.active_bound[t];
      if (run.regret[t] > run.active_bound[t]) ++batch.violations;
    }
    batch.max_ledger_gap = std::max(batch.max_ledger_gap, run.ledger_gap);
    batch.unbounded_losses += run.unbounded_losses;
  }
}

}  // namespace

RegretBatch run_regret_cone(const ExperimentConfig& config, bool keep_rows) {
  const std::uint64_t seed = config.require_seed();
  const StructurePtr structure = ConeStructure::parse(config.structure);
  RegretBatch batch;
  batch.label = "regret_cone_" + label_for_structure(config.structure, *structure);
  batch.rank = structure->rank();
  for (int i = 0; i < config.instances; ++i) {
    const std::uint64_t stream = mix_seed(seed, 0);
    Rng rng = Rng::for_stream(stream, static_cast<std::uint64_t>(i));
    RegretRun run = run_cone_sequence(structure, config.stepsize, config.horizon,
                                      rng, config.zero_loss, keep_rows);
    run.stream_seed = static_cast<std::uint64_t>(i);
    batch.runs.push_back(std::move(run));
  }
  aggregate(batch, config.horizon);
  return batch;
}

std::vector<RegretBatch> run_regret_ball(const ExperimentConfig& config,
                                         bool keep_rows) {
  const std::uint64_t seed = config.require_seed();
  std::vector<RegretBatch> batches;
  for (int d : config.dims) {
    RegretBatch batch;
    batch.label = "regret_ball_d" + std::to_string(d);
    batch.rank = 2;
    for (int i = 0; i < config.instances; ++i) {
      Rng rng = Rng::for_stream(mix_seed(seed, static_cast<std::uint64_t>(d)),
                                static_cast<std::uint64_t>(i));
      RegretRun run = run_ball_sequence(d, config.stepsize, config.horizon, rng,
                                        config.zero_loss, keep_rows);
      run.stream_seed = static_cast<std::uint64_t>(i);
      batch.runs.push_back(std::move(run));
    }
    aggregate(batch, config.horizon);
    batches.push_back(std::move(batch));
  }
  return batches;
}

void write_regret_batch(const RegretBatch& batch,
                        const std::filesystem::path& out_dir) {
  const std::filesystem::path dir = out_dir / batch.label;
  for (std::size_t i = 0; i < batch.runs.size(); ++i) {
    const RegretRun& run = batch.runs[i];
    if (run.rows.empty()) continue;
    CsvWriter csv(dir / ("instance_" + pad_index(static_cast<int>(i)) + ".csv"),
                  {"t", "epoch", "eta", "inst_loss", "cum_loss", "best_hindsight",
                   "regret", "bound_optimized", "bound_doubling"});
    for (const RegretRow& r : run.rows) {
      csv.row({r.t, static_cast<std::int64_t>(r.epoch), r.eta, r.inst_loss,
               r.cum_loss, r.best_hindsight, r.regret, r.bound_optimized,
               r.bound_doubling});
    }
    csv.close();
  }
  CsvWriter agg(dir / "aggregate.csv", {"t", "max_regret", "bound"});
  for (std::size_t t = 0; t < batch.max_regret.size(); ++t) {
    agg.row({static_cast<std::int64_t>(t + 1), batch.max_regret[t], batch.bound[t]});
  }
  agg.close();
}

// ---------------------------------------------------------------------------

CompareBatch run_compare_ogd(const ExperimentConfig& config) {
  const std::uint64_t seed = config.require_seed();
  CompareBatch batch;
  batch.dim = config.dims.front();
  const std::int64_t horizon = config.horizon;
  batch.eta_scmwu_ball = optimized_stepsize(horizon, 2);
  batch.eta_ogd = 1.0 / std::sqrt(static_cast<double>(horizon));

  for (int i = 0; i < config.instances; ++i) {
    Rng rng = Rng::for_stream(mix_seed(seed, 0x0cd0ULL + batch.dim),
                              static_cast<std::uint64_t>(i));
    CompareRun run;
    run.stream_seed = static_cast<std::uint64_t>(i);
    run.scmwu_stream_hash = kFnvOffset;
    run.ogd_stream_hash = kFnvOffset;
    BallState mw = BallState::initial(batch.dim, FixedStepsize{batch.eta_scmwu_ball});
    Eigen::VectorXd ogd = Eigen::VectorXd::Zero(batch.dim);
    BallRegretLedger mw_ledger(batch.dim);
    BallRegretLedger ogd_ledger(batch.dim);
    run.regret_scmwu_ball.reserve(horizon);
    run.regret_ogd.reserve(horizon);

    auto feed_mw = [&](const Eigen::VectorXd& m) {
      fnv1a(run.scmwu_stream_hash, m);
      mw_ledger.record(m, mw.iterate());
      mw = scmwu_ball_step(mw, m);
    };
    auto feed_ogd = [&](const Eigen::VectorXd& m) {
      fnv1a(run.ogd_stream_hash, m);
      ogd_ledger.record(m, ogd);
      ogd = ogd_ball_step(ogd, m, batch.eta_ogd);
    };
    for (std::int64_t t = 1; t <= horizon; ++t) {
      const Eigen::VectorXd m = config.zero_loss ? Eigen::VectorXd::Zero(batch.dim)
                                                 : random_ball_vector(batch.dim, rng);
      feed_mw(m);
      feed_ogd(m);
      run.regret_scmwu_ball.push_back(mw_ledger.regret());
      run.regret_ogd.push_back(ogd_ledger.regret());
    }
    batch.runs.push_back(std::move(run));
  }
  return batch;
}

void write_compare_batch(const CompareBatch& batch,
                         const std::filesystem::path& out_dir,
                         bool write_instances) {
  const std::filesystem::path dir =
      out_dir / ("compare_ogd_d" + std::to_string(batch.dim));
  if (batch.runs.empty()) return;
  const std::size_t horizon = batch.runs.front().regret_ogd.size();
  if (write_instances) {
    for (std::size_t i = 0; i < batch.runs.size(); ++i) {
      const CompareRun& run = batch.runs[i];
      CsvWriter csv(dir / ("instance_" + pad_index(static_cast<int>(i)) + ".csv"),
                    {"t", "regret_scmwu_ball", "regret_ogd"});
      for (std::size_t t = 0; t < horizon; ++t) {
        csv.row({static_cast<std::int64_t>(t + 1), run.regret_scmwu_ball[t],
                 run.regret_ogd[t]});
      }
      csv.close();
    }
  }
  CsvWriter agg(dir / "aggregate.csv",
                {"t", "mean_regret_scmwu_ball", "mean_regret_ogd",
                 "max_regret_scmwu_ball", "max_regret_ogd"});
  const double inv = 1.0 / static_cast<double>(batch.runs.size());
  for (std::size_t t = 0; t < horizon; ++t) {
    double mean_mw = 0.0, mean_ogd = 0.0;
    double max_mw = -std::numeric_limits<double>::infinity();
    double max_ogd = max_mw;
    for (const CompareRun& run : batch.runs) {
      mean_mw += run.regret_scmwu_ball[t] * inv;
      mean_ogd += run.regret_ogd[t] * inv;
      max_mw = std::max(max_mw, run.regret_scmwu_ball[t]);
      max_ogd = std::max(max_ogd, run.regret_ogd[t]);
    }
    agg.row({static_cast<std::int64_t>(t + 1), mean_mw, mean_ogd, max_mw, max_ogd});
  }
  agg.close();

  nlohmann::json meta = {{"dim", batch.dim},
                         {"eta_scmwu_ball", batch.eta_scmwu_ball},
                         {"eta_ogd", batch.eta_ogd},
                         {"instances", batch.runs.size()}};
  std::ofstream out(dir / "meta.json");
  if (!out) throw IoError("cannot write " + (dir / "meta.json").string());
  out << meta.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

LevelPoint level_curve_point(double u1, double u2,
                             const std::vector<double>& reference) {
  LevelPoint p{u1, u2, std::nullopt, std::nullopt};
  if (std::hypot(u1, u2) >= 0.5) return p;
  const StructurePtr s = soc(2);
  Eigen::VectorXd coeffs(3);
  coeffs << u1, u2, 0.5;
  const AlgebraElement x(s, coeffs);
  const AlgebraElement y(s, Eigen::Vector3d(reference[0], reference[1], reference[2]));
  try {
    p.phi = entropy(x);
  } catch (const DomainError&) {
  }
  try {
    p.bregman = bregman_for_report(x, y);
  } catch (const DomainError&) {
  }
  return p;
}

std::vector<LevelPoint> run_level_curves(const ExperimentConfig& config) {
  const int n = config.grid;
  std::vector<LevelPoint> points;
  points.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double u1 = -0.5 + static_cast<double>(i) / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double u2 = -0.5 + static_cast<double>(j) / (n - 1);
      points.push_back(level_curve_point(u1, u2, config.reference));
    }
  }
  return points;
}

void write_level_curves(const std::vector<LevelPoint>& points,
                        const std::filesystem::path& path) {
  CsvWriter csv(path, {"u1", "u2", "phi", "bregman"});
  for (const LevelPoint& p : points) {
    csv.row({p.u1, p.u2,
             p.phi ? CsvWriter::Cell{*p.phi} : CsvWriter::Cell{std::monostate{}},
             p.bregman ? CsvWriter::Cell{*p.bregman}
                       : CsvWriter::Cell{std::monostate{}}});
  }
  csv.close();
}

// ---------------------------------------------------------------------------

namespace {

void write_svm_trace(const SvmInstance& instance, const SvmGameTrace& trace,
                     const std::filesystem::path& dir, int index) {
  CsvWriter csv(dir / ("instance_" + pad_index(index) + ".csv"),
                {"t", "utility", "margin_of_running_xbar", "nash_gap_upper"});
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const SvmGameStep& s = trace.steps[t];
    csv.row({static_cast<std::int64_t>(t + 1), s.utility, s.running_margin,
             s.running_gap});
  }
  csv.close();
  if (instance.points.cols() != 2) return;
  // Two-dimensional instances also get the data needed for a scatter plot.
  nlohmann::json j;
  j["direction"] = std::vector<double>(instance.direction.data(),
                                       instance.direction.data() + 2);
  j["mean_classifier"] = std::vector<double>(trace.mean_classifier.data(),
                                             trace.mean_classifier.data() + 2);
  j["generated_margin"] = instance.generated_margin;
  j["attained_margin"] = trace.attained_margin;
  j["geometric_margin"] = trace.geometric_margin;
  nlohmann::json pts = nlohmann::json::array();
  for (Eigen::Index i = 0; i < instance.points.rows(); ++i) {
    pts.push_back({instance.points(i, 0), instance.points(i, 1)});
  }
  j["points"] = std::move(pts);
  std::ofstream out(dir / ("instance_" + pad_index(index) + ".json"));
  if (!out) throw IoError("cannot write SVM trace JSON in " + dir.string());
  out << j.dump() << '\n';
}

}  // namespace

std::vector<SvmCell> run_svm_game(const ExperimentConfig& config,
                                  const std::filesystem::path* trace_dir) {
  const std::uint64_t seed = config.require_seed();
  const std::vector<std::int64_t> horizons =
      config.horizons.empty() ? std::vector<std::int64_t>{config.horizon}
                              : config.horizons;
  std::vector<SvmCell> cells;
  for (int d : config.dims) {
    for (std::int64_t horizon : horizons) {
      SvmCell cell;
      cell.dim = d;
      cell.horizon = horizon;
      cell.points = config.points;
      cell.epsilon_bound = svm_epsilon(horizon, config.points);
      const double lower_pad = 2.0 * std::sqrt(std::log(2.0) / horizon);
      const double upper_pad =
          2.0 * std::sqrt(std::log(static_cast<double>(config.points)) / horizon);
      const std::filesystem::path dir =
          trace_dir ? *trace_dir / ("svm_d" + std::to_string(d) + "_T" +
                                    std::to_string(horizon))
                    : std::filesystem::path();
      SvmGameOptions options;
      options.record_running_metrics = trace_dir != nullptr;

      for (int i = 0; i < config.instances; ++i) {
        const std::uint64_t stream = mix_seed(seed, 0x5f3ULL + d);
        Rng rng = Rng::for_stream(stream, static_cast<std::uint64_t>(i));
        const SvmInstance instance =
            generate_svm_instance(config.points, d, config.margin, rng);
        const SvmGameTrace trace = svm_game_run(instance, horizon, options);

        SvmInstanceResult r;
        r.index = i;
        r.stream_seed = static_cast<std::uint64_t>(i);
        r.generated_margin = instance.generated_margin;
        r.attained_margin = trace.attained_margin;
        r.geometric_margin = trace.geometric_margin;
        r.ratio = trace.geometric_margin / instance.generated_margin;
        r.additive_error = instance.generated_margin - trace.geometric_margin;
        r.mean_utility = trace.mean_utility;
        r.best_response_value = trace.best_response_value;
        r.nash_gap = trace.nash_gap;
        r.sandwich_lower_slack =
            trace.mean_utility - (trace.best_response_value - lower_pad);
        r.sandwich_upper_slack =
            (trace.attained_margin + upper_pad) - trace.mean_utility;
        if (r.sandwich_lower_slack < -kSandwichTolerance ||
            r.sandwich_upper_slack < -kSandwichTolerance) {
          ++cell.sandwich_violations;
        }
        if (trace_dir && config.write_instances) {
          write_svm_trace(instance, trace, dir, i);
        }
        cell.instances.push_back(r);
      }
      double sum_ratio = 0.0, sum_eps = 0.0;
      cell.worst_ratio = std::numeric_limits<double>::infinity();
      cell.worst_eps = -std::numeric_limits<double>::infinity();
      for (const auto& r : cell.instances) {
        sum_ratio += r.ratio;
        sum_eps += r.additive_error;
        cell.worst_ratio = std::min(cell.worst_ratio, r.ratio);
        cell.worst_eps = std::max(cell.worst_eps, r.additive_error);
      }
      cell.mean_ratio = sum_ratio / cell.instances.size();
      cell.mean_eps = sum_eps / cell.instances.size();
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

nlohmann::json svm_cell_summary(const SvmCell& cell) {
  std::vector<std::uint64_t> seeds;
  for (const auto& r : cell.instances) seeds.push_back(r.stream_seed);
  return {{"d", cell.dim},
          {"T", cell.horizon},
          {"n", cell.points},
          {"mean_ratio", cell.mean_ratio},
          {"worst_ratio", cell.worst_ratio},
          {"mean_eps", cell.mean_eps},
          {"worst_eps", cell.worst_eps},
          {"epsilon_bound", cell.epsilon_bound},
          {"sandwich_violations", cell.sandwich_violations},
          {"seeds", seeds}};
}

void write_svm_summaries(const std::vector<SvmCell>& cells,
                         const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  nlohmann::json all = nlohmann::json::array();
  for (const SvmCell& cell : cells) {
    const nlohmann::json summary = svm_cell_summary(cell);
    const auto path = out_dir / ("summary_d" + std::to_string(cell.dim) + "_T" +
                                 std::to_string(cell.horizon) + ".json");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << summary.dump(2) << '\n';
    all.push_back(summary);
  }
  std::ofstream out(out_dir / "summary.json");
  if (!out) throw IoError("cannot write " + (out_dir / "summary.json").string());
  out << nlohmann::json{{"cells", all}}.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

bool run_selftest(std::uint64_t seed, int cases, std::ostream& out) {
  bool all_ok = true;
  auto report = [&](const std::string& name, double worst, double tol) {
    const bool ok = worst <= tol;
    all_ok = all_ok && ok;
    out << (ok ? "[PASS] " : "[FAIL] ") << name << "  worst=" << worst
        << "  tol=" << tol << '\n';
  };
  const std::vector<StructurePtr> structures = {
      orthant(4), soc(3), psd(3), ConeStructure::preset("fig2-right")};

  Rng rng(seed);
  double frame = 0.0, inverse = 0.0, shift = 0.0, three_point = 0.0;
  double breg_neg = 0.0, central = 0.0, equivalence = 0.0;
  for (int c = 0; c < cases; ++c) {
    const StructurePtr& s = structures[c % structures.size()];
    const AlgebraElement e = identity(s);

    const AlgebraElement x = random_element(s, rng);
    const SpectralDecomposition dec = spectral_decompose(x);
    AlgebraElement sum(s);
    for (std::size_t i = 0; i < dec.frame.size(); ++i) {
      const AlgebraElement& q = dec.frame[i];
      frame = std::max(frame, norm(square(q) - q));
      sum += q;
    }
    frame = std::max(frame, norm(sum - e));
    frame = std::max(frame, norm(dec.reconstruct() - x) / std::max(1.0, norm(x)));

    inverse = std::max(inverse, norm(ln_element(exp_element(x)) - x));
    const double cval = rng.uniform(-3.0, 3.0);
    const AlgebraElement lhs = exp_element(x + cval * e);
    const AlgebraElement rhs = std::exp(cval) * exp_element(x);
    shift = std::max(shift, norm(lhs - rhs) / norm(rhs));

    const AlgebraElement u = random_trace_one(s, rng);
    const AlgebraElement v = random_trace_one(s, rng);
    const AlgebraElement w = random_trace_one(s, rng);
    three_point = std::max(three_point, std::abs(three_point_gap(u, v, w)));
    breg_neg = std::max(breg_neg, -bregman(u, v));
    central = std::max(central,
                       bregman(u, e / s->rank()) - std::log(double(s->rank())));

    if (c < cases / 10 + 1) {
      const double eta = 0.5;
      LearnerState st = LearnerState::initial(s, FixedStepsize{eta});
      AlgebraElement p = st.iterate();
      for (int t = 0; t < 20; ++t) {
        const AlgebraElement m = random_bounded_loss(s, rng);
        st = scmwu_step(st, m);
        p = omd_step(p, m, eta);
        const AlgebraElement f = ftrl_iterate(st.cumulative_loss(), eta);
        equivalence = std::max({equivalence, max_abs_diff(st.iterate(), p),
                                max_abs_diff(st.iterate(), f)});
      }
    }
  }
  report("frame axioms and reconstruction", frame, 1e-9);
  report("exp/ln inverse", inverse, 1e-9);
  report("shift identity", shift, 1e-9);
  report("three-point identity", three_point, 1e-9);
  report("bregman nonnegativity", breg_neg, 1e-9);
  report("entropy central bound", central, 1e-9);
  report("SCMWU/FTRL/OMD equivalence", equivalence, 1e-9);
  return all_ok;
}

int run_experiment(const ExperimentConfig& config, std::ostream& log) {
  const std::filesystem::path& out = config.out_dir;
  bool ok = true;
  auto report_batch = [&](const RegretBatch& b) {
    log << b.label << ": rank " << b.rank << ", " << b.runs.size()
        << " instances, violations " << b.violations << ", ledger gap "
        << b.max_ledger_gap << '\n';
    if (b.unbounded_losses > 0) {
      log << "warning: " << b.unbounded_losses
          << " losses outside -e <= m <= e; regret guarantee does not apply\n";
    }
    if (b.violations > 0 || b.max_ledger_gap > kLedgerTolerance) ok = false;
  };

  switch (config.kind) {
    case ExperimentKind::kRegretCone: {
      const RegretBatch batch = run_regret_cone(config, config.write_instances);
      write_regret_batch(batch, out);
      report_batch(batch);
      break;
    }
    case ExperimentKind::kRegretBall: {
      for (const RegretBatch& batch : run_regret_ball(config, config.write_instances)) {
        write_regret_batch(batch, out);
        report_batch(batch);
      }
      break;
    }
    case ExperimentKind::kCompareOgd: {
      const CompareBatch batch = run_compare_ogd(config);
      write_compare_batch(batch, out, config.write_instances);
      for (const CompareRun& run : batch.runs) {
        if (run.scmwu_stream_hash != run.ogd_stream_hash) ok = false;
      }
      log << "compare_ogd: d=" << batch.dim << ", " << batch.runs.size()
          << " instances, eta_scmwu_ball=" << batch.eta_scmwu_ball
          << ", eta_ogd=" << batch.eta_ogd << '\n';
      break;
    }
    case ExperimentKind::kSvmGame: {
      const std::vector<SvmCell> cells = run_svm_game(config, &out);
      write_svm_summaries(cells, out);
      for (const SvmCell& cell : cells) {
        log << "svm_game d=" << cell.dim << " T=" << cell.horizon
            << ": mean_ratio=" << cell.mean_ratio
            << " worst_ratio=" << cell.worst_ratio
            << " mean_eps=" << cell.mean_eps << " worst_eps=" << cell.worst_eps
            << " sandwich_violations=" << cell.sandwich_violations << '\n';
        if (cell.sandwich_violations > 0) ok = false;
      }
      break;
    }
    case ExperimentKind::kLevelCurves: {
      const auto points = run_level_curves(config);
      write_level_curves(points, out / "level_curves.csv");
      log << "level_curves: " << points.size() << " grid points\n";
      break;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace symcone::harness
