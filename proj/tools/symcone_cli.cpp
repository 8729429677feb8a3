#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "symcone/errors.hpp"
#include "symcone/harness.hpp"

namespace {

namespace h = symcone::harness;

constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> instances;
  std::optional<std::int64_t> horizon;
};

void add_common(CLI::App* sub, Overrides& o) {
  sub->add_option("--config", o.config, "JSON experiment config");
  sub->add_option("--seed", o.seed, "Base seed (required here or in the config)");
  sub->add_option("--out", o.out, "Output directory");
  sub->add_option("--instances", o.instances, "Number of random instances")
      ->check(CLI::PositiveNumber);
  sub->add_option("--horizon", o.horizon, "Horizon T")->check(CLI::PositiveNumber);
}

h::ExperimentConfig resolve(h::ExperimentKind kind, const Overrides& o) {
  h::ExperimentConfig c;
  if (!o.config.empty()) {
    c = h::load_config(o.config);
  }
  c.kind = kind;
  if (o.seed) c.seed = *o.seed;
  if (o.out) c.out_dir = *o.out;
  if (o.instances) c.instances = *o.instances;
  if (o.horizon) {
    c.horizon = *o.horizon;
    c.horizons.clear();
  }
  c.require_seed();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online learning over symmetric cones"};
  app.require_subcommand(1);

  struct Entry {
    const char* name;
    h::ExperimentKind kind;
    const char* help;
  };
  const Entry entries[] = {
      {"regret-cone", h::ExperimentKind::kRegretCone,
       "SCMWU regret on random bounded losses over a cone structure"},
      {"regret-ball", h::ExperimentKind::kRegretBall,
       "SCMWU-ball regret on random losses in the unit ball"},
      {"compare-ogd", h::ExperimentKind::kCompareOgd,
       "SCMWU-ball and projected OGD on shared loss sequences"},
      {"svm-game", h::ExperimentKind::kSvmGame,
       "Hard-margin SVM as a simplex vs ball zero-sum game"},
      {"level-curves", h::ExperimentKind::kLevelCurves,
       "Entropy and Bregman values on the SOC_2 trace-one slice"},
  };
  Overrides overrides[std::size(entries)];
  CLI::App* subs[std::size(entries)];
  for (std::size_t i = 0; i < std::size(entries); ++i) {
    subs[i] = app.add_subcommand(entries[i].name, entries[i].help);
    add_common(subs[i], overrides[i]);
  }

  std::uint64_t selftest_seed = 1;
  int selftest_cases = 1000;
  CLI::App* selftest = app.add_subcommand("selftest", "Randomized invariant checks");
  selftest->add_option("--seed", selftest_seed, "Seed");
  selftest->add_option("--cases", selftest_cases, "Cases per suite")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (selftest->parsed()) {
      return h::run_selftest(selftest_seed, selftest_cases, std::cout)
                 ? 0
                 : kExitInvariant;
    }
    for (std::size_t i = 0; i < std::size(entries); ++i) {
      if (!subs[i]->parsed()) continue;
      const h::ExperimentConfig config = resolve(entries[i].kind, overrides[i]);
      return h::run_experiment(config, std::cout);
    }
  } catch (const symcone::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const symcone::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}
