#include <gtest/gtest.h>

#include "spg/simulate.hpp"

using namespace spg;

namespace {

MarkovChain path() {
  MarkovChain mc;
  mc.target = {false, false, true};
  mc.transitions = {{{1, Rational(1), 3}}, {{2, Rational(1), -1}}, {}};
  return mc;
}

MarkovChain coin() {
  MarkovChain mc;
  mc.target = {false, true};
  mc.transitions = {{{0, Rational(1, 2), 1}, {1, Rational(1, 2), 0}}, {}};
  return mc;
}

}  // namespace

TEST(Simulate, Deterministic) {
  SimReport r = simulate(path(), 0, {7, 100, 10});
  EXPECT_DOUBLE_EQ(r.mean_tp, 2.0);
  EXPECT_DOUBLE_EQ(r.stderr_tp, 0.0);
  EXPECT_DOUBLE_EQ(r.reach_fraction, 1.0);
  EXPECT_EQ(r.truncated, 0u);
  EXPECT_EQ(r.episodes, 100u);
}

TEST(Simulate, Reproducible) {
  SimConfig c{42, 5000, 1000};
  EXPECT_EQ(simulate(coin(), 0, c), simulate(coin(), 0, c));
  SimConfig other = c;
  other.seed = 43;
  EXPECT_NE(simulate(coin(), 0, c).mean_tp, simulate(coin(), 0, other).mean_tp);
}

TEST(Simulate, GeometricMean) {
  // Number of failures before the first success: mean 1.
  SimReport r = simulate(coin(), 0, {3, 100000, 10000});
  EXPECT_NEAR(r.mean_tp, 1.0, 4 * r.stderr_tp);
  EXPECT_GT(r.stderr_tp, 0.0);
}

TEST(Simulate, TruncatesTraps) {
  MarkovChain mc;
  mc.target = {false, true};
  mc.transitions = {{{0, Rational(1), -1}}, {}};
  SimReport r = simulate(mc, 0, {1, 10, 50});
  EXPECT_EQ(r.truncated, 10u);
  EXPECT_DOUBLE_EQ(r.reach_fraction, 0.0);
}

TEST(Simulate, StartAtTarget) {
  SimReport r = simulate(path(), 2, {1, 10, 5});
  EXPECT_DOUBLE_EQ(r.mean_tp, 0.0);
  EXPECT_DOUBLE_EQ(r.reach_fraction, 1.0);
}
