#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "pocsa/benchmarks.hpp"
#include "pocsa/errors.hpp"
#include "pocsa/rng.hpp"

namespace {

using namespace pocsa;
using bench::BenchmarkSpec;

double eval(int id, const std::vector<double>& x,
            std::optional<RotationMatrix> m = std::nullopt) {
  return bench::evaluate(BenchmarkSpec{id, x.size(), std::move(m)}, x);
}

std::vector<double> random_point(RngStream& s, int id, std::size_t d) {
  const auto& fi = bench::info(id);
  std::vector<double> x(d);
  for (double& v : x) v = fi.lower + (fi.upper - fi.lower) * s.uniform01();
  return x;
}

TEST(Benchmarks, TableIsComplete) {
  for (int id = 1; id <= bench::kFunctionCount; ++id) {
    const auto& fi = bench::info(id);
    EXPECT_EQ(fi.id, id);
    EXPECT_LT(fi.lower, fi.upper);
    EXPECT_EQ(fi.rotated, id >= 9);
  }
  EXPECT_THROW(bench::info(0), ConfigError);
  EXPECT_THROW(bench::info(15), ConfigError);
  EXPECT_EQ(bench::info(1).upper, 100.0);
  EXPECT_EQ(bench::info(3).upper, 32.768);
  EXPECT_EQ(bench::info(8).lower, -500.0);
}

TEST(Benchmarks, KnownOptima) {
  for (std::size_t d : {2u, 5u, 10u, 30u}) {
    const std::vector<double> zero(d, 0.0);
    EXPECT_EQ(eval(1, zero), 0.0);
    EXPECT_EQ(eval(2, std::vector<double>(d, 1.0)), 0.0);
    EXPECT_NEAR(eval(3, zero), 0.0, 1e-15);
    EXPECT_EQ(eval(4, zero), 0.0);
    EXPECT_EQ(eval(5, zero), 0.0);
    EXPECT_EQ(eval(6, zero), 0.0);
    EXPECT_EQ(eval(7, zero), 0.0);
  }
}

TEST(Benchmarks, SchwefelConstantGap) {
  for (std::size_t d : {2u, 5u, 10u, 30u}) {
    const double v = eval(8, std::vector<double>(d, -420.9687));
    EXPECT_NEAR(v, 0.01712 * d, 1e-3 * d);
  }
  EXPECT_NEAR(eval(8, std::vector<double>(5, -420.9687)), 0.085563639187467, 1e-9);
  // The minimum is on the negative side under this sign convention.
  EXPECT_GT(eval(8, std::vector<double>(5, 420.9687)), 4000.0);
}

TEST(Benchmarks, RastriginAgainstPerCoordinateOracle) {
  RngStream s(1, 0);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_point(s, 6, 7);
    double expected = 0.0;
    for (double v : x) expected += 10.0 + v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    EXPECT_NEAR(eval(6, x), expected, 1e-12);
  }
}

TEST(Benchmarks, NoncontinuousRastriginRounding) {
  EXPECT_NEAR(eval(7, {0.5}), 20.25, 1e-12);
  EXPECT_NEAR(eval(7, {0.7}), 20.25, 1e-12);
  EXPECT_NEAR(eval(7, {-0.75}), 1.0, 1e-12);
  EXPECT_NEAR(eval(7, {1.25}), eval(6, {1.5}), 1e-12);
  EXPECT_EQ(eval(7, {0.3}), eval(6, {0.3}));
}

TEST(Benchmarks, ReferenceValues) {
  EXPECT_NEAR(eval(2, {0.0, 0.0}), 1.0, 1e-15);
  const double two_pi = 2.0 * std::numbers::pi;
  EXPECT_NEAR(eval(4, {two_pi}), two_pi * two_pi / 4000.0, 1e-12);
  EXPECT_NEAR(eval(3, {1.0}), 20.0 - 20.0 * std::exp(-0.2), 1e-12);
}

TEST(Benchmarks, WeierstrassAgainstDirectSum) {
  RngStream s(2, 0);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_point(s, 5, 4);
    double expected = 0.0;
    for (double v : x)
      for (int k = 0; k <= 20; ++k)
        expected += std::pow(0.5, k) * std::cos(2.0 * std::numbers::pi * std::pow(3.0, k) * (v + 0.5));
    double offset = 0.0;
    for (int k = 0; k <= 20; ++k)
      offset += std::pow(0.5, k) * std::cos(2.0 * std::numbers::pi * std::pow(3.0, k) * 0.5);
    EXPECT_NEAR(eval(5, x), expected - 4 * offset, 1e-9);
  }
}

TEST(Benchmarks, RotatedAreBaseOfRotatedPoint) {
  RngStream s(3, 0);
  for (int id = 9; id <= 13; ++id) {
    const auto m = generate_rotation(6, 100 + id);
    for (int t = 0; t < 100; ++t) {
      const auto x = random_point(s, id, 6);
      const auto z = m.apply(x);
      ASSERT_NEAR(eval(id, x, m), eval(id - 6, z), 1e-12);
    }
    // M^T 0 = 0 is the rotated optimum.
    EXPECT_NEAR(eval(id, m.transpose().apply(std::vector<double>(6, 0.0)), m), 0.0, 1e-12);
  }
}

TEST(Benchmarks, RotatedNeedMatchingMatrix) {
  EXPECT_THROW(eval(9, std::vector<double>(3, 0.0)), EvaluationError);
  EXPECT_THROW(eval(9, std::vector<double>(3, 0.0), RotationMatrix::identity(4)), EvaluationError);
  EXPECT_THROW(bench::make_objective({12, 3, std::nullopt}), ConfigError);
  EXPECT_THROW(bench::evaluate({1, 4, std::nullopt}, std::vector<double>(3, 0.0)),
               EvaluationError);
}

TEST(F14, ShiftFixedPoint) {
  const auto m = generate_rotation(5, 7);
  const std::vector<double> x(5, bench::kSchwefelShift);
  const auto z = bench::f14_shift(x, m);
  const double y = bench::kSchwefelShift;
  for (double v : z) EXPECT_NEAR(v, y * std::sin(std::sqrt(y)), 1e-9);
}

TEST(F14, PenaltyBranch) {
  const auto id = RotationMatrix::identity(2);
  const auto z = bench::f14_shift(std::vector<double>{600.0, -700.0}, id);
  EXPECT_NEAR(z[0], 10.0, 1e-9);
  EXPECT_NEAR(z[1], 40.0, 1e-9);
  EXPECT_NEAR(eval(14, {600.0, -700.0}, id), 838.0 + 10.0 + 40.0, 1e-9);
}

TEST(F14, IdentityRotationReducesToSchwefelForm) {
  const auto id = RotationMatrix::identity(5);
  const double at_shift = eval(14, std::vector<double>(5, bench::kSchwefelShift), id);
  EXPECT_NEAR(at_shift, eval(8, std::vector<double>(5, -bench::kSchwefelShift)), 1e-9);
  EXPECT_NEAR(at_shift, 0.0856119021, 1e-9);
  RngStream s(4, 0);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_point(s, 14, 5);
    std::vector<double> neg(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
    EXPECT_NEAR(eval(14, x, id), eval(8, neg), 1e-9);
  }
}

TEST(F14, FloorIsRotationInvariant) {
  for (std::size_t d : {5u, 10u}) {
    const auto m = generate_rotation(d, 99);
    EXPECT_NEAR(eval(14, std::vector<double>(d, bench::kSchwefelShift), m), 0.01712 * d, 1e-3 * d);
  }
}

TEST(Benchmarks, FiniteOnDeclaredBoxes) {
  RngStream s(5, 0);
  for (int id = 1; id <= 14; ++id) {
    std::optional<RotationMatrix> m;
    if (id >= 9) m = generate_rotation(10, id);
    const auto f = bench::make_objective({id, 10, m});
    EXPECT_EQ(f.optimum_value().has_value(), id != 8 && id != 14);
    for (int t = 0; t < 200; ++t) ASSERT_TRUE(std::isfinite(f.evaluate(random_point(s, id, 10))));
    std::vector<double> corner(f.upper().begin(), f.upper().end());
    ASSERT_TRUE(std::isfinite(f.evaluate(corner)));
  }
}

}  // namespace
