#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spg/det_strategies.hpp"
#include "spg/optimality.hpp"

using namespace spg;
using spg::testing::fig;

TEST(Optimality, Figure1HasNone) {
  GameGraph g = fig(1);
  OptimalityReport r = check_optimal_memoryless(g);
  EXPECT_FALSE(r.exists);
  EXPECT_EQ(r.reason, OptimalityReason::EarlyStationarityFailed);
  EXPECT_EQ(r.f_last[g.id("v_Min")], ExtValue::finite(-1));
  EXPECT_THROW(extract_optimal(g, r), DomainError);
}

TEST(Optimality, Figure3) {
  GameGraph g = fig(3);
  OptimalityReport r = check_optimal_memoryless(g);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(to_string(r.reason), "ok");
  PureStrategy s = extract_optimal(g, r);
  EXPECT_EQ(s(g.id("v0")), g.id("v1"));
  EXPECT_EQ(s(g.id("v1")), g.id("smiley"));
  EXPECT_EQ(eval_deterministic(g, s, g.id("v0")), ExtValue::finite(-2));
}

TEST(Optimality, TargetsOnly) {
  GameGraph g = parse_game("target t\n");
  EXPECT_TRUE(check_optimal_memoryless(g).exists);
}

TEST(Optimality, PlusInfinityIgnored) {
  GameGraph g = parse_game("min a\nmin b\ntarget t\nedge a a -1\nedge b t 2\nedge b a 0\n");
  OptimalityReport r = check_optimal_memoryless(g);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ((*r.optimal_strategy)(g.id("b")), g.id("t"));
  EXPECT_TRUE(r.f_last[g.id("a")].is_plus_inf());
}

TEST(Optimality, ExitBeatsZeroLoop) {
  GameGraph g = parse_game(
      "min a\nmax b\ntarget t\nedge a b 0\nedge b a 0\nedge a t 1\nedge b t 0\n");
  OptimalityReport r = check_optimal_memoryless(g);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ((*r.optimal_strategy)(g.id("a")), g.id("t"));
}

TEST(Optimality, ReasonNames) {
  EXPECT_EQ(to_string(OptimalityReason::EarlyStationarityFailed), "early-stationarity-failed");
  EXPECT_EQ(to_string(OptimalityReason::AttractorFailed), "attractor-failed");
}

TEST(Optimality, MinusInfinityThrows) {
  GameGraph g = parse_game("min a\nmax b\ntarget t\nedge a b 0\nedge b a -1\nedge a t 0\n");
  EXPECT_THROW(check_optimal_memoryless(g), DomainError);
}
