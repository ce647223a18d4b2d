#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pocsa/errors.hpp"
#include "pocsa/orbit.hpp"

namespace {

using namespace pocsa;

OrbitState two_members(double v, int dir, double upper, double lower) {
  OrbitState s;
  s.params = OrbitParams{10.0, 0.05, 0.05};
  s.value = {1.0, v};
  s.direction = {1, dir};
  s.upper = {upper, upper};
  s.lower = {lower, lower};
  s.best_member = 0;
  return s;
}

TEST(InitOrbit, BracketsAroundBestMember) {
  RngStream s(1, 0);
  const OrbitState o = init_orbit(6, 2, OrbitParams{}, s);
  ASSERT_EQ(o.size(), 6u);
  const double ref = o.value[2];
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_GT(o.value[i], 0.0);
    EXPECT_LE(o.value[i], 100.0);
    EXPECT_TRUE(o.direction[i] == 1 || o.direction[i] == -1);
    EXPECT_DOUBLE_EQ(o.upper[i], 10.0 * ref);
    EXPECT_DOUBLE_EQ(o.lower[i], ref / 10.0);
  }
  EXPECT_EQ(o.reference(), ref);
  EXPECT_EQ(o.displayed_direction(2), 0);
}

TEST(InitOrbit, ReferenceHintOverridesBestOnly) {
  RngStream a(3, 0);
  RngStream b(3, 0);
  const OrbitState drawn = init_orbit(4, 1, OrbitParams{}, a);
  const OrbitState hinted = init_orbit(4, 1, OrbitParams{}, b, 1.0);
  EXPECT_EQ(hinted.value[1], 1.0);
  EXPECT_DOUBLE_EQ(hinted.upper[0], 10.0);
  EXPECT_DOUBLE_EQ(hinted.lower[3], 0.1);
  for (std::size_t i : {0u, 2u, 3u}) EXPECT_EQ(hinted.value[i], drawn.value[i]);
  EXPECT_EQ(hinted.direction, drawn.direction);
  EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(InitOrbit, Deterministic) {
  RngStream a(9, 0);
  RngStream b(9, 0);
  const OrbitState x = init_orbit(8, 0, OrbitParams{}, a);
  const OrbitState y = init_orbit(8, 0, OrbitParams{}, b);
  EXPECT_EQ(x.value, y.value);
  EXPECT_EQ(x.direction, y.direction);
}

TEST(InitOrbit, ParameterErrors) {
  RngStream s(1, 0);
  EXPECT_THROW(init_orbit(3, 0, OrbitParams{1.0, 0.05, 0.05}, s), ConfigError);
  EXPECT_THROW(init_orbit(3, 0, OrbitParams{10.0, 0.0, 0.05}, s), ConfigError);
  EXPECT_THROW(init_orbit(3, 0, OrbitParams{10.0, 0.05, 0.2}, s), ConfigError);
  EXPECT_THROW(init_orbit(3, 3, OrbitParams{}, s), ConfigError);
  EXPECT_THROW(init_orbit(3, 0, OrbitParams{}, s, -1.0), ConfigError);
}

TEST(RebaseBounds, ResetsEveryBracket) {
  OrbitState s = two_members(5.0, 1, 33.0, 0.01);
  s.value = {7.0, 2.0};
  rebase_bounds(s, 1);
  EXPECT_EQ(s.best_member, 1u);
  EXPECT_EQ(s.upper, (std::vector<double>{20.0, 20.0}));
  EXPECT_EQ(s.lower, (std::vector<double>{0.2, 0.2}));
  EXPECT_EQ(s.value[1], 2.0);
  EXPECT_EQ(s.direction, (std::vector<int>{1, 1}));
}

TEST(RebaseBounds, DiscardsExpansions) {
  OrbitState s = two_members(9.8, 1, 10.0, 0.1);
  po_step(s);
  ASSERT_DOUBLE_EQ(s.upper[1], 10.5);
  rebase_bounds(s, 0);
  EXPECT_DOUBLE_EQ(s.upper[1], 10.0);
  EXPECT_DOUBLE_EQ(s.lower[1], 0.1);
}

TEST(PoStep, InteriorMove) {
  OrbitState s = two_members(1.0, 1, 10.0, 0.1);
  po_step(s);
  EXPECT_DOUBLE_EQ(s.value[1], 1.05);
  EXPECT_EQ(s.direction[1], 1);
  EXPECT_EQ(s.value[0], 1.0);
}

TEST(PoStep, UpperHitRevertsFlipsAndExpands) {
  OrbitState s = two_members(9.8, 1, 10.0, 0.1);
  po_step(s);
  EXPECT_EQ(s.value[1], 9.8);
  EXPECT_EQ(s.direction[1], -1);
  EXPECT_DOUBLE_EQ(s.upper[1], 10.5);
  EXPECT_DOUBLE_EQ(s.lower[1], 0.1);
}

TEST(PoStep, LowerHitRevertsFlipsAndExpands) {
  OrbitState s = two_members(0.102, -1, 10.0, 0.1);
  po_step(s);
  EXPECT_EQ(s.value[1], 0.102);
  EXPECT_EQ(s.direction[1], 1);
  EXPECT_DOUBLE_EQ(s.lower[1], 0.095);
  EXPECT_DOUBLE_EQ(s.upper[1], 10.0);
}

TEST(PoStep, HandSteppedTraversal) {
  OrbitState s = two_members(1.0, 1, 10.0, 0.1);
  double v = 1.0;
  int dir = 1;
  double up = 10.0;
  double lo = 0.1;
  for (int k = 0; k < 500; ++k) {
    const double moved = dir > 0 ? v * 1.05 : v * 0.95;
    if (dir > 0 && moved >= up) {
      dir = -1;
      up *= 1.05;
    } else if (dir < 0 && moved <= lo) {
      dir = 1;
      lo *= 0.95;
    } else {
      v = moved;
    }
    po_step(s);
    ASSERT_EQ(s.value[1], v);
    ASSERT_EQ(s.direction[1], dir);
    ASSERT_EQ(s.upper[1], up);
    ASSERT_EQ(s.lower[1], lo);
  }
}

TEST(PoStep, BracketAndPerpetuityInvariants) {
  RngStream s(21, 0);
  const OrbitParams params{10.0, 0.05, 0.05};
  OrbitState o = init_orbit(10, 4, params, s);
  const std::size_t window =
      10 * static_cast<std::size_t>(std::ceil(std::log(params.beta * params.beta) / params.phi));
  std::vector<std::size_t> since(10, 0);
  std::vector<bool> inside(10, false);
  for (std::size_t k = 1; k <= 100000; ++k) {
    if (k % 5000 == 0) {
      rebase_bounds(o, (k / 5000) % 10);
      std::fill(since.begin(), since.end(), 0);
      std::fill(inside.begin(), inside.end(), false);
    }
    const auto before = o.direction;
    po_step(o);
    for (std::size_t i = 0; i < 10; ++i) {
      if (i == o.best_member) continue;
      since[i] = o.direction[i] != before[i] ? 0 : since[i] + 1;
      ASSERT_LE(since[i], window) << "member " << i << " stopped orbiting at step " << k;
      const bool in = o.value[i] >= o.lower[i] && o.value[i] <= o.upper[i] * (1.0 + params.phi);
      // Members start anywhere; once inside the bracket they never leave it.
      if (inside[i]) ASSERT_TRUE(in) << "member " << i << " left its bracket at step " << k;
      inside[i] = inside[i] || in;
    }
    ASSERT_EQ(o.value[o.best_member], o.reference());
  }
}

}  // namespace
