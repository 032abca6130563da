#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spg/det_strategies.hpp"

using namespace spg;
using spg::testing::fig;

TEST(Attractor, Figure1) {
  GameGraph g = fig(1);
  AttractorResult a = attractor(g);
  ASSERT_TRUE(a.covers_all());
  EXPECT_EQ(*a.distance[g.id("smiley")], 0u);
  EXPECT_EQ(*a.distance[g.id("v_Min")], 1u);
  EXPECT_EQ(*a.distance[g.id("v_Max")], 2u);
  EXPECT_EQ(a.strategy(g.id("v_Min")), g.id("smiley"));
}

TEST(Attractor, RestrictedUnreachable) {
  GameGraph g = fig(3);
  PermissiveEdges e;
  e.allowed = {{g.id("v1")}, {g.id("v0")}, {}};
  AttractorResult a = attractor(g, e);
  EXPECT_FALSE(a.distance[g.id("v0")]);
  EXPECT_FALSE(a.distance[g.id("v1")]);
  EXPECT_FALSE(a.covers_all());
}

TEST(Attractor, MaxEscapes) {
  GameGraph g = parse_game("max m\nmin s\ntarget t\nedge m t 0\nedge m s 0\nedge s s 0\n");
  AttractorResult a = attractor(g);
  EXPECT_FALSE(a.distance[g.id("m")]);
  EXPECT_FALSE(a.distance[g.id("s")]);
}

TEST(Attractor, TieBreakSmallestId) {
  GameGraph g = parse_game("min a\ntarget t2\ntarget t1\nedge a t1 0\nedge a t2 0\n");
  EXPECT_EQ(attractor(g).strategy(g.id("a")), g.id("t2"));
}

TEST(FakeOptimal, Figure1) {
  GameGraph g = fig(1);
  PureStrategy s = fake_optimal_nc_strategy(g, solve_values(g));
  EXPECT_EQ(s(g.id("v_Min")), g.id("v_Max"));
  EXPECT_TRUE(verify_nc(g, s));
  EXPECT_EQ(fake_values(g, s)[g.id("v_Min")], ExtValue::finite(-10));
}

TEST(FakeOptimal, Figure2) {
  GameGraph g = fig(2);
  ValueVector v = solve_values(g);
  PureStrategy s = fake_optimal_nc_strategy(g, v);
  EXPECT_EQ(s(g.id("v1")), g.id("v0"));
  EXPECT_EQ(s(g.id("v3")), g.id("v1"));
  EXPECT_TRUE(verify_nc(g, s));
  auto fv = fake_values(g, s);
  for (VertexId u = 0; u < g.num_vertices(); ++u) EXPECT_LE(fv[u], v[u]);
}

TEST(FakeOptimal, MinusInfinityRegion) {
  GameGraph g = parse_game(
      "min a\nmax b\ntarget t\nedge a b 0\nedge b a -1\nedge a t 0\n");
  ValueVector v = solve_values(g);
  PureStrategy s = fake_optimal_nc_strategy(g, v);
  EXPECT_EQ(s(g.id("a")), g.id("b"));
  EXPECT_TRUE(verify_nc(g, s));
}

TEST(FakeOptimal, RejectsPlusInfinity) {
  GameGraph g = parse_game("min a\ntarget t\nmin b\nedge a a 0\nedge b t 0\n");
  EXPECT_THROW(fake_optimal_nc_strategy(g, solve_values(g)), DomainError);
}

TEST(VerifyNc, Cycles) {
  GameGraph g = fig(3);
  PureStrategy zero(3);
  zero.set(g.id("v0"), g.id("v1"));
  zero.set(g.id("v1"), g.id("v0"));
  EXPECT_FALSE(verify_nc(g, zero));
  PureStrategy exit = zero;
  exit.set(g.id("v1"), g.id("smiley"));
  EXPECT_TRUE(verify_nc(g, exit));

  GameGraph f1 = fig(1);
  EXPECT_TRUE(verify_nc(f1, attractor(f1).strategy));
}

TEST(Switching, Alpha) {
  EXPECT_EQ(switching_alpha(fig(1), 0), 121);
  EXPECT_EQ(switching_alpha(fig(1), 7), 3 * (40 + 7) + 1);
  EXPECT_EQ(switching_alpha(fig(2), 3), (120 + 3) * 5 + 1);
  EXPECT_EQ(switching_alpha(parse_game("target t\n"), 0), 1);
}

TEST(Switching, Figure2Components) {
  GameGraph g = fig(2);
  SwitchingStrategy s = switching_strategy(g, solve_values(g), 0);
  EXPECT_EQ(s.sigma2(g.id("v1")), g.id("v2"));
  EXPECT_EQ(s.sigma2(g.id("v3")), g.id("T"));
  EXPECT_THROW(switching_strategy(g, solve_values(g), -1), DomainError);
}

TEST(Eval, PureStrategies) {
  GameGraph g = fig(1);
  PureStrategy s2 = attractor(g).strategy;
  EXPECT_EQ(eval_deterministic(g, s2, g.id("v_Min")), ExtValue::finite(0));
  EXPECT_EQ(eval_deterministic(g, s2, g.id("v_Max")), ExtValue::finite(-1));

  PureStrategy loop(3);
  loop.set(g.id("v_Min"), g.id("v_Max"));
  EXPECT_TRUE(eval_deterministic(g, loop, g.id("v_Min")).is_plus_inf());
}

TEST(Eval, SwitchingReachesValue) {
  GameGraph g = fig(1);
  ValueVector v = solve_values(g);
  SwitchingStrategy s = switching_strategy(g, v, 10);
  EXPECT_EQ(eval_deterministic(g, s, g.id("v_Min")), ExtValue::finite(-10));
  EXPECT_THROW(eval_deterministic_all(g, s, 10), CapExceeded);
}

TEST(Eval, SwitchingWithinBound) {
  GameGraph g = fig(2);
  ValueVector v = solve_values(g);
  for (long n : {0L, 5L}) {
    SwitchingStrategy s = switching_strategy(g, v, n);
    auto e = eval_deterministic_all(g, s);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      ASSERT_TRUE(e[u].is_finite());
      EXPECT_LE(e[u].value(), std::max(v[u].value(), -n));
    }
  }
}
