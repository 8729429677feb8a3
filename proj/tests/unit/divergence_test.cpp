#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "properties.hpp"
#include "symcone/divergence.hpp"
#include "symcone/errors.hpp"
#include "symcone/random.hpp"
#include "symcone/spectral.hpp"

using namespace symcone;

namespace {

AlgebraElement vec(const StructurePtr& st, std::initializer_list<double> v) {
  return AlgebraElement(st, Eigen::VectorXd::Map(v.begin(), v.size()));
}

AlgebraElement spread(const StructurePtr& s, double lo, double hi, Rng& rng) {
  Eigen::VectorXd v(s->rank());
  for (int i = 0; i < v.size(); ++i) v[i] = rng.uniform(lo, hi);
  return random_with_eigenvalues(s, v, rng);
}

}  // namespace

TEST(Entropy, Examples) {
  for (const StructurePtr& s : properties::default_structures()) {
    const AlgebraElement e = identity(s);
    EXPECT_NEAR(entropy(e), 0.0, 1e-15);
    EXPECT_NEAR(entropy(e / s->rank()), -std::log(double(s->rank())), 1e-12);
  }
  const AlgebraElement half(soc(2), Eigen::Vector3d(0, 0, 0.5));
  EXPECT_NEAR(entropy(half), -std::log(2.0), 1e-15);
}

TEST(Entropy, MatchesEigenvalueSum) {
  Rng rng(1);
  for (const StructurePtr& s : properties::default_structures()) {
    const AlgebraElement x = spread(s, 0.01, 4.0, rng);
    double expected = 0;
    for (double l : eigenvalues(x)) expected += l * std::log(l);
    EXPECT_NEAR(entropy(x), expected, 1e-10);
  }
}

TEST(Entropy, Soc2MatchesClosedForm) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const AlgebraElement x = random_trace_one(soc(2), rng);
    if (!in_interior(x, 1e-9)) continue;
    EXPECT_NEAR(entropy(x), oracles::soc2_entropy(x.storage()), 1e-12);
  }
}

TEST(Entropy, DomainErrors) {
  EXPECT_THROW(entropy(vec(orthant(2), {1, 0})), DomainError);
  EXPECT_THROW(entropy(AlgebraElement(soc(2), Eigen::Vector3d(0.5, 0, 0.5))),
               DomainError);
  EXPECT_THROW(entropy_gradient(vec(orthant(2), {1, -1})), DomainError);
}

TEST(EntropyEval, GradientOnlyWhenRequested) {
  const AlgebraElement x = vec(orthant(2), {1, std::exp(1.0)});
  EXPECT_FALSE(evaluate_entropy(x, false).gradient.has_value());
  const EntropyEval ev = evaluate_entropy(x, true);
  ASSERT_TRUE(ev.gradient.has_value());
  EXPECT_NEAR(ev.value, std::exp(1.0), 1e-14);
}

TEST(EntropyGradient, Examples) {
  const StructurePtr s = ConeStructure::preset("fig2-right");
  EXPECT_LE(max_abs_diff(entropy_gradient(identity(s)), identity(s)), 1e-15);
  const AlgebraElement g = entropy_gradient(vec(orthant(2), {1, std::exp(1.0)}));
  EXPECT_NEAR(g.storage()[0], 1.0, 1e-15);
  EXPECT_NEAR(g.storage()[1], 2.0, 1e-15);
}

TEST(EntropyGradient, FiniteDifferenceProperty) {
  const properties::SuiteResult r = properties::gradient_finite_difference(21, 1000);
  EXPECT_TRUE(r.passed()) << r.worst_ratio;
}

TEST(EntropyGradient, BlowsUpTowardBoundary) {
  const StructurePtr s = ConeStructure::parse("psd3");
  Rng rng(3);
  Rng frame_seed = rng;
  double previous = 0.0;
  for (int k = 1; k <= 8; ++k) {
    Rng frame = frame_seed;
    const AlgebraElement x = random_with_eigenvalues(
        s, Eigen::Vector3d(0.6, 0.4 - std::pow(10.0, -k), std::pow(10.0, -k)), frame);
    const double n = norm(entropy_gradient(x));
    EXPECT_GT(n, previous) << "k=" << k;
    previous = n;
  }
  const AlgebraElement near_edge = vec(orthant(2), {1, 1e-8});
  EXPECT_GT(norm(entropy_gradient(near_edge)), 15.0);
}

TEST(EntropyGradientInverse, Examples) {
  const StructurePtr s = ConeStructure::preset("fig2-right");
  EXPECT_LE(max_abs_diff(entropy_gradient_inverse(identity(s)), identity(s)), 1e-15);
  const AlgebraElement x =
      entropy_gradient_inverse(vec(orthant(2), {1, 1 + std::log(2.0)}));
  EXPECT_NEAR(x.storage()[0], 1.0, 1e-15);
  EXPECT_NEAR(x.storage()[1], 2.0, 1e-14);
}

TEST(EntropyGradientInverse, RoundTrip) {
  Rng rng(4);
  for (const StructurePtr& s : properties::default_structures()) {
    for (int i = 0; i < 100; ++i) {
      const AlgebraElement g = random_element(s, rng, 2.0);
      const AlgebraElement x = entropy_gradient_inverse(g);
      ASSERT_TRUE(in_interior(x, 0.0));
      ASSERT_LE(norm(entropy_gradient(x) - g), 1e-9);
    }
  }
}

TEST(Bregman, Examples) {
  const AlgebraElement x = vec(orthant(2), {0.9, 0.1});
  const AlgebraElement y = vec(orthant(2), {0.5, 0.5});
  EXPECT_NEAR(bregman(x, y), 0.3680642071684971, 1e-14);
  EXPECT_NEAR(bregman(x, x), 0.0, 1e-15);
}

TEST(Bregman, FirstOrderFormAndNonnegativity) {
  Rng rng(5);
  const auto structures = properties::default_structures();
  for (int c = 0; c < 1000; ++c) {
    const StructurePtr& s = structures[c % structures.size()];
    const AlgebraElement x = spread(s, 0.01, 3.0, rng);
    const AlgebraElement y = spread(s, 0.01, 3.0, rng);
    const double h = bregman(x, y);
    ASSERT_GE(h, -1e-9);
    const double first_order = entropy(x) - entropy(y) - inner(entropy_gradient(y), x - y);
    ASSERT_NEAR(h, first_order, 1e-9 * std::max(1.0, std::abs(h)));
  }
}

TEST(Bregman, ZeroOnlyAtCoincidence) {
  Rng rng(6);
  for (const StructurePtr& s : properties::default_structures()) {
    const AlgebraElement x = spread(s, 0.1, 2.0, rng);
    EXPECT_LE(std::abs(bregman(x, x)), 1e-9);
    AlgebraElement d = random_element(s, rng);
    d = d / norm(d);
    EXPECT_GT(bregman(x + 1e-3 * d, x), 1e-9);
  }
}

TEST(Bregman, OrthantIsUnnormalizedKl) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const AlgebraElement x = spread(orthant(5), 0.01, 3.0, rng);
    const AlgebraElement y = spread(orthant(5), 0.01, 3.0, rng);
    EXPECT_NEAR(bregman(x, y), oracles::unnormalized_kl(x.storage(), y.storage()), 1e-12);
  }
}

TEST(Bregman, PsdIsQuantumRelativeEntropy) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const AlgebraElement x = spread(psd(4), 0.01, 3.0, rng);
    const AlgebraElement y = spread(psd(4), 0.01, 3.0, rng);
    EXPECT_NEAR(bregman(x, y),
                oracles::quantum_relative_entropy(x.psd_block(0), y.psd_block(0)), 1e-8);
  }
}

TEST(Bregman, ReportClampsOnlyTinyNegatives) {
  const AlgebraElement x = vec(orthant(2), {0.3, 0.7});
  EXPECT_EQ(bregman_for_report(x, x), 0.0);
  EXPECT_THROW(bregman(vec(orthant(2), {0, 1}), x), DomainError);
}

TEST(Bregman, CentralBoundProperty) {
  const properties::SuiteResult r = properties::entropy_central_bound(22, 1000);
  EXPECT_TRUE(r.passed()) << r.worst_ratio;
}

TEST(Bregman, ThreePointProperty) {
  const properties::SuiteResult r = properties::three_point_identity(23, 1000);
  EXPECT_TRUE(r.passed()) << r.worst_ratio;
  const StructurePtr s = ConeStructure::preset("fig2-right");
  const AlgebraElement c = identity(s) / s->rank();
  EXPECT_NEAR(three_point_gap(c, c, c), 0.0, 1e-15);
  Rng rng(9);
  const AlgebraElement z = random_trace_one(s, rng);
  EXPECT_NEAR(three_point_gap(c, c, z + 1e-3 * identity(s)), 0.0, 1e-9);
}

TEST(Projection, Examples) {
  const AlgebraElement p = bregman_project_trace_one(vec(orthant(2), {1, 3}));
  EXPECT_DOUBLE_EQ(p.storage()[0], 0.25);
  EXPECT_DOUBLE_EQ(p.storage()[1], 0.75);
  Rng rng(10);
  const StructurePtr s = ConeStructure::preset("fig2-right");
  const AlgebraElement u = spread(s, 0.01, 1.0, rng);
  const AlgebraElement t1 = u / trace(u);
  EXPECT_LE(max_abs_diff(bregman_project_trace_one(t1), t1), 1e-16);
  EXPECT_THROW(bregman_project_trace_one(vec(orthant(2), {0, 1})), DomainError);
}

TEST(Projection, BeatsSampledSlicePoints) {
  Rng rng(11);
  for (const StructurePtr& s : properties::default_structures()) {
    const AlgebraElement y = spread(s, 0.05, 3.0, rng);
    const AlgebraElement p = bregman_project_trace_one(y);
    EXPECT_NEAR(trace(p), 1.0, 1e-12);
    EXPECT_TRUE(in_interior(p, 0.0));
    const double hp = bregman(p, y);
    for (int i = 0; i < 500; ++i) {
      AlgebraElement u = random_trace_one(s, rng);
      if (!in_interior(u, 1e-12)) continue;
      ASSERT_LE(hp, bregman(u, y) + 1e-6);
    }
  }
}

TEST(Projection, GridOracleSimplex) {
  const Eigen::Vector3d y(0.7, 1.9, 0.4);
  const AlgebraElement ye(orthant(3), y);
  const double closed = bregman(bregman_project_trace_one(ye), ye);
  const double grid = oracles::projection_grid_simplex3(y, 1e-3);
  EXPECT_LE(std::abs(grid - closed), 1e-5);
}

TEST(Projection, GridOracleSoc2Slice) {
  const Eigen::Vector3d y(0.3, -0.2, 0.9);
  const AlgebraElement ye(soc(2), y);
  const AlgebraElement p = bregman_project_trace_one(ye);
  EXPECT_NEAR(bregman(p, ye), oracles::soc2_bregman(p.storage(), y), 1e-12);
  const double grid = oracles::projection_grid_soc2(y, 1e-3);
  EXPECT_LE(std::abs(grid - bregman(p, ye)), 1e-5);
}

TEST(Entropy, StrictlyConvex) {
  Rng rng(12);
  const auto structures = properties::default_structures();
  for (int c = 0; c < 500; ++c) {
    const StructurePtr& s = structures[c % structures.size()];
    const AlgebraElement x = spread(s, 0.01, 3.0, rng);
    const AlgebraElement y = spread(s, 0.01, 3.0, rng);
    if (norm(x - y) < 1e-3) continue;
    const double t = rng.uniform(0.05, 0.95);
    ASSERT_LT(entropy(t * x + (1 - t) * y), t * entropy(x) + (1 - t) * entropy(y) - 1e-12);
  }
}
