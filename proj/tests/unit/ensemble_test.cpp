#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "pocsa/benchmarks.hpp"
#include "pocsa/ensemble.hpp"
#include "pocsa/errors.hpp"

namespace {

using namespace pocsa;

ObjectiveFunction sphere(std::size_t d, double lo = -100, double hi = 100) {
  return ObjectiveFunction("sphere", d, lo, hi, bench::sphere, 0.0);
}

TEST(Initialize, SamplesInsideBoxAndCountsEvaluations) {
  const auto f = sphere(5);
  RngStream s(3, 0);
  const Ensemble e = initialize_ensemble(f, 5, s);
  ASSERT_EQ(e.size(), 5u);
  EXPECT_EQ(e.eval_count, 5u);
  EXPECT_EQ(e.iteration, 0u);
  for (const auto& m : e.members) {
    ASSERT_EQ(m.coords.size(), 5u);
    EXPECT_TRUE(f.contains(m.coords));
    EXPECT_DOUBLE_EQ(m.energy, bench::sphere(m.coords));
  }
  for (const auto& m : e.members) EXPECT_LE(e.best.energy, m.energy);
  EXPECT_EQ(e.best.energy, e.members[e.best_index].energy);
}

TEST(Initialize, RejectsSingleOptimizer) {
  RngStream s(3, 0);
  EXPECT_THROW(initialize_ensemble(sphere(3), 1, s), ConfigError);
}

TEST(Initialize, Deterministic) {
  RngStream a(5, 0);
  RngStream b(5, 0);
  const auto f = sphere(4);
  const Ensemble x = initialize_ensemble(f, 6, a);
  const Ensemble y = initialize_ensemble(f, 6, b);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(x.members[i].coords, y.members[i].coords);
}

TEST(Initialize, TiesGoToLowestIndex) {
  const ObjectiveFunction flat("flat", 2, -1, 1, [](std::span<const double>) { return 3.0; });
  RngStream s(1, 0);
  EXPECT_EQ(initialize_ensemble(flat, 4, s).best_index, 0u);
}

TEST(Perturb, DirectSubstitution) {
  const auto f = sphere(4);
  const std::vector<double> x(4, 0.0);
  const std::vector<double> eps(4, 1.0);
  EXPECT_EQ(perturb(x, eps, 2.0, f), std::vector<double>(4, 2.0));
}

TEST(Perturb, ClampsToNearestBound) {
  const auto f = sphere(3);
  const std::vector<double> x = {100.0, -100.0, 50.0};
  const std::vector<double> eps = {1e6, -3.0, -1e9};
  EXPECT_EQ(perturb(x, eps, 1.0, f), (std::vector<double>{100.0, -100.0, -100.0}));
}

TEST(Perturb, VanishingTemperatureKeepsPoint) {
  const auto f = sphere(3);
  const std::vector<double> x = {1.5, -2.5, 3.0};
  const std::vector<double> eps = {10.0, -4.0, 0.3};
  const auto y = perturb(x, eps, 1e-300, f);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(y[j], x[j]);
}

TEST(GenerateProbe, UsesOneCauchyPerCoordinate) {
  const auto f = sphere(3);
  RngStream init(8, 0);
  Ensemble e = initialize_ensemble(f, 3, init);
  RngStream s(8, 1);
  RngStream replay(8, 1);
  const Solution p = generate_probe(e, 1, 0.5, s, f);
  EXPECT_EQ(e.eval_count, 4u);
  std::vector<double> eps(3);
  for (double& v : eps) v = replay.cauchy();
  EXPECT_EQ(p.coords, perturb(e.members[1].coords, eps, 0.5, f));
  EXPECT_EQ(p.energy, bench::sphere(p.coords));
  EXPECT_EQ(s.next_u64(), replay.next_u64());
}

TEST(GenerateProbe, NonFiniteEnergyNamesPoint) {
  const ObjectiveFunction bad("bad", 2, -1, 1, [](std::span<const double>) {
    return std::numeric_limits<double>::quiet_NaN();
  });
  const ObjectiveFunction good("good", 2, -1, 1, bench::sphere);
  RngStream init(1, 0);
  Ensemble e = initialize_ensemble(good, 2, init);
  RngStream s(1, 1);
  try {
    generate_probe(e, 0, 1.0, s, bad);
    FAIL() << "expected EvaluationError";
  } catch (const EvaluationError& err) {
    EXPECT_NE(std::string(err.what()).find("bad"), std::string::npos);
    EXPECT_NE(std::string(err.what()).find("("), std::string::npos);
  }
}

TEST(Objective, DimensionMismatchThrows) {
  const auto f = sphere(3);
  const std::vector<double> x(2, 0.0);
  EXPECT_THROW(f.evaluate(x), EvaluationError);
}

TEST(TrackBest, StrictImprovementOnly) {
  Ensemble e;
  e.members.resize(2);
  e.best.energy = 5.0;
  Solution tie{{0.0}, 5.0};
  EXPECT_FALSE(track_best(e, tie, 1));
  EXPECT_EQ(e.best_index, 0u);
  Solution better{{1.0}, 4.0};
  EXPECT_TRUE(track_best(e, better, 1));
  EXPECT_EQ(e.best_index, 1u);
  EXPECT_EQ(e.best.energy, 4.0);
}

TEST(TrackBest, SequentialSweepKeepsMinimum) {
  Ensemble e;
  e.members.resize(3);
  e.best.energy = 10.0;
  const std::vector<double> candidates = {7.0, 3.0, 5.0};
  for (std::size_t i = 0; i < 3; ++i) track_best(e, Solution{{0.0}, candidates[i]}, i);
  EXPECT_EQ(e.best.energy, 3.0);
  EXPECT_EQ(e.best_index, 1u);
}

}  // namespace
