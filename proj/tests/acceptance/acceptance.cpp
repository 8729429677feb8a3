// Checks every primary acceptance criterion and prints one [PASS]/[FAIL] line
// per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "properties.hpp"
#include "symcone/ball.hpp"
#include "symcone/games.hpp"
#include "symcone/harness.hpp"
#include "symcone/learners.hpp"
#include "symcone/random.hpp"
#include "symcone/spectral.hpp"

using namespace symcone;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

int failures = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string timing = fmt("%.1fs", secs);
  if (budget_seconds > 0 && secs > budget_seconds) {
    out.pass = false;
    timing += " (budget " + fmt("%.0fs", budget_seconds) + " exceeded)";
  }
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << name << " | " << out.detail
            << " | " << timing << std::endl;
}

Outcome equivalence() {
  Rng rng(kSeed);
  double worst = 0.0;
  const std::vector<StructurePtr> structures = {
      orthant(5), soc(5), psd(3), ConeStructure::parse("no5+soc5")};
  for (const StructurePtr& s : structures) {
    for (double eta : {0.1, 1.0}) {
      for (int seq = 0; seq < 10; ++seq) {
        LearnerState st = LearnerState::initial(s, FixedStepsize{eta});
        AlgebraElement p = st.iterate();
        for (int t = 0; t < 100; ++t) {
          const AlgebraElement m = random_bounded_loss(s, rng);
          st = scmwu_step(st, m);
          p = omd_step(p, m, eta);
          const AlgebraElement f = ftrl_iterate(st.cumulative_loss(), eta);
          worst = std::max({worst, max_abs_diff(st.iterate(), p),
                            max_abs_diff(st.iterate(), f), max_abs_diff(p, f)});
        }
      }
    }
  }
  return {worst <= 1e-9, "max deviation " + fmt("%.3g", worst) + " (tol 1e-9)"};
}

Outcome ftrl_oracle() {
  Rng rng(kSeed + 1);
  const StructurePtr s = orthant(3);
  double worst = 0.0;
  for (int seq = 0; seq < 4; ++seq) {
    for (double eta : {0.25, 1.0}) {
      AlgebraElement total(s);
      for (int t = 0; t < 10; ++t) total += random_bounded_loss(s, rng);
      const Eigen::Vector3d grid =
          oracles::ftrl_grid_simplex3(total.storage(), eta, 1e-3);
      worst = std::max(worst,
                       (grid - ftrl_iterate(total, eta).storage()).cwiseAbs().maxCoeff());
    }
  }
  return {worst <= 1e-2, "max argument error " + fmt("%.3g", worst) + " (tol 1e-2)"};
}

Outcome cone_regret() {
  std::ostringstream detail;
  bool ok = true;
  for (const char* preset : {"fig2-left", "fig2-midleft", "fig2-midright", "fig2-right"}) {
    harness::ExperimentConfig c;
    c.kind = harness::ExperimentKind::kRegretCone;
    c.structure = preset;
    c.seed = kSeed + 2;
    c.instances = 100;
    c.horizon = 10000;
    const harness::RegretBatch b = harness::run_regret_cone(c, false);
    double headroom = INFINITY;
    for (std::size_t t = 0; t < b.bound.size(); ++t) {
      headroom = std::min(headroom, b.bound[t] - b.max_regret[t]);
    }
    ok = ok && b.violations == 0 && b.max_ledger_gap <= 1e-9 && b.unbounded_losses == 0;
    detail << preset << ": r=" << b.rank << " violations=" << b.violations
           << " min headroom=" << fmt("%.3g", headroom) << "; ";
  }
  return {ok, detail.str()};
}

Outcome ball_regret() {
  harness::ExperimentConfig c;
  c.kind = harness::ExperimentKind::kRegretBall;
  c.dims = {2, 3, 5, 10};
  c.seed = kSeed + 3;
  c.instances = 100;
  c.horizon = 10000;
  std::ostringstream detail;
  bool ok = true;
  for (const harness::RegretBatch& b : harness::run_regret_ball(c, false)) {
    ok = ok && b.violations == 0 && b.max_ledger_gap <= 1e-9 && b.unbounded_losses == 0;
    detail << b.label << " violations=" << b.violations << " final max regret="
           << fmt("%.4g", b.max_regret.back()) << "/" << fmt("%.4g", b.bound.back())
           << "; ";
  }
  return {ok, detail.str()};
}

Outcome specializations() {
  Rng rng(kSeed + 4);
  double mwu = 0.0, mmwu = 0.0, lifted = 0.0;
  for (int seq = 0; seq < 20; ++seq) {
    const double eta = rng.uniform(0.05, 1.0);
    {
      const StructurePtr s = orthant(6);
      std::vector<Eigen::VectorXd> raw;
      LearnerState st = LearnerState::initial(s, FixedStepsize{eta});
      std::vector<AlgebraElement> its;
      for (int t = 0; t < 100; ++t) {
        const AlgebraElement m = random_bounded_loss(s, rng);
        raw.push_back(m.storage());
        st = scmwu_step(st, m);
        its.push_back(st.iterate());
      }
      const auto oracle = oracles::scalar_mwu(raw, eta);
      for (int t = 0; t < 100; ++t) {
        mwu = std::max(mwu, (its[t].storage() - oracle[t + 1]).cwiseAbs().maxCoeff());
      }
    }
    {
      const StructurePtr s = psd(4);
      std::vector<Eigen::MatrixXd> raw;
      LearnerState st = LearnerState::initial(s, FixedStepsize{eta});
      std::vector<AlgebraElement> its;
      for (int t = 0; t < 100; ++t) {
        const AlgebraElement m = random_bounded_loss(s, rng);
        raw.push_back(m.psd_block(0));
        st = scmwu_step(st, m);
        its.push_back(st.iterate());
      }
      const auto oracle = oracles::matrix_mwu(raw, eta);
      for (int t = 0; t < 100; ++t) {
        mmwu = std::max(mmwu,
                        (its[t].psd_block(0) - oracle[t + 1]).cwiseAbs().maxCoeff());
      }
    }
    {
      const int d = 2 + seq % 9;
      BallState ball = BallState::initial(d, FixedStepsize{eta});
      LearnerState cone = LearnerState::initial(soc(d), FixedStepsize{eta});
      for (int t = 0; t < 100; ++t) {
        const Eigen::VectorXd m = random_ball_vector(d, rng);
        Eigen::VectorXd lift = Eigen::VectorXd::Zero(d + 1);
        lift.head(d) = m;
        ball = scmwu_ball_step(ball, m);
        cone = scmwu_step(cone, AlgebraElement(soc(d), lift));
        Eigen::VectorXd expected(d + 1);
        expected << ball.iterate() / 2, 0.5;
        lifted = std::max(lifted,
                          (cone.iterate().storage() - expected).cwiseAbs().maxCoeff());
      }
    }
  }
  return {mwu <= 1e-12 && mmwu <= 1e-8 && lifted <= 1e-10,
          "orthant vs scalar MWU " + fmt("%.3g", mwu) + " (tol 1e-12), PSD vs expm " +
              fmt("%.3g", mmwu) + " (tol 1e-8), ball vs lifted SOC " +
              fmt("%.3g", lifted) + " (tol 1e-10)"};
}

Outcome property_suites() {
  const auto suites = properties::all_suites(kSeed + 5, 1000);
  bool ok = true;
  std::ostringstream detail;
  for (const auto& s : suites) {
    ok = ok && s.passed() && s.cases >= 1000;
    detail << s.name << " " << (s.cases - s.failures) << "/" << s.cases
           << " (worst " << fmt("%.2g", s.worst_ratio) << " of tol); ";
  }
  return {ok, detail.str()};
}

Outcome svm_statistics() {
  harness::ExperimentConfig c;
  c.kind = harness::ExperimentKind::kSvmGame;
  c.dims = {10};
  c.horizons = {100, 1000};
  c.points = 1000;
  c.instances = 100;
  c.seed = kSeed + 6;
  const auto cells = harness::run_svm_game(c, nullptr);
  const harness::SvmCell& t100 = cells[0];
  const harness::SvmCell& t1000 = cells[1];
  double worst_slack = INFINITY;
  for (const auto& cell : cells) {
    for (const auto& r : cell.instances) {
      worst_slack = std::min({worst_slack, r.sandwich_lower_slack, r.sandwich_upper_slack});
    }
  }
  const bool ratio100 = t100.mean_ratio >= 0.85;
  const bool eps100 = t100.mean_eps <= 0.02;
  const bool ratio1000 = t1000.mean_ratio >= 0.95;
  const bool sandwich = t100.sandwich_violations == 0 && t1000.sandwich_violations == 0;
  return {ratio100 && eps100 && ratio1000 && sandwich,
          std::string("T=100 mean ratio ") + fmt("%.4f", t100.mean_ratio) +
              (ratio100 ? " >= " : " < ") + "0.85, mean additive error " +
              fmt("%.4g", t100.mean_eps) + (eps100 ? " <= " : " > ") +
              "0.02; T=1000 mean ratio " + fmt("%.4f", t1000.mean_ratio) +
              (ratio1000 ? " >= " : " < ") + "0.95; sandwich violations " +
              std::to_string(t100.sandwich_violations + t1000.sandwich_violations) +
              " (min slack " + fmt("%.3g", worst_slack) + ")"};
}

Outcome horizon_value() {
  const std::int64_t v = required_horizon(0.02, 1000);
  return {v == 144832, "required_horizon(0.02, 1000) = " + std::to_string(v)};
}

}  // namespace

int main() {
  std::cout << "acceptance suite, seed " << kSeed << std::endl;
  criterion("three-viewpoint equivalence", 10, equivalence);
  criterion("FTRL grid oracle", 30, ftrl_oracle);
  criterion("cone regret under doubling bound", 0, cone_regret);
  criterion("ball regret under doubling bound", 0, ball_regret);
  criterion("specializations", 0, specializations);
  criterion("property suites", 120, property_suites);
  criterion("SVM game statistics", 0, svm_statistics);
  criterion("required horizon", 0, horizon_value);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                                                            " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
