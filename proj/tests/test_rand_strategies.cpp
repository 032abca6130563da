#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spg/graph_analysis.hpp"
#include "spg/rand_strategies.hpp"

using namespace spg;
using spg::testing::fig;

namespace {

PureStrategy pure(const GameGraph& g, std::initializer_list<std::pair<const char*, const char*>> c) {
  PureStrategy s(g.num_vertices());
  for (auto [u, v] : c) s.set(g.id(u), g.id(v));
  return s;
}

}  // namespace

TEST(RhoP, Figure1Mixes) {
  GameGraph g = fig(1);
  RandStrategy r = build_rho_p(g, pure(g, {{"v_Min", "v_Max"}}), pure(g, {{"v_Min", "smiley"}}),
                               Rational(1, 3));
  VertexId m = g.id("v_Min");
  EXPECT_EQ(r.prob(m, g.id("v_Max")), Rational(1, 3));
  EXPECT_EQ(r.prob(m, g.id("smiley")), Rational(2, 3));
  EXPECT_NO_THROW(validate(g, r));
}

TEST(RhoP, DiracOutsideNegativeComponents) {
  GameGraph g = parse_game("min a\nmin b\ntarget t\nedge a b 1\nedge a t 5\nedge b t 0\n");
  RandStrategy r = build_rho_p(g, pure(g, {{"a", "b"}, {"b", "t"}}),
                               pure(g, {{"a", "t"}, {"b", "t"}}), Rational(1, 2));
  EXPECT_EQ(r.support(g.id("a")), std::vector<VertexId>{g.id("b")});
  EXPECT_EQ(r.prob(g.id("b"), g.id("t")), 1);
}

TEST(RhoP, AgreeingChoicesCollapse) {
  GameGraph g = fig(2);
  PureStrategy s = pure(g, {{"v1", "v0"}, {"v3", "T"}});
  RandStrategy r = build_rho_p(g, s, pure(g, {{"v1", "v2"}, {"v3", "T"}}), Rational(9, 10));
  EXPECT_EQ(r.at(g.id("v3")).size(), 1u);
  EXPECT_EQ(r.prob(g.id("v1"), g.id("v2")), Rational(1, 10));
}

TEST(Validate, Rejects) {
  GameGraph g = fig(1);
  RandStrategy r(3);
  EXPECT_THROW(validate(g, r), DomainError);
  r.set(g.id("v_Min"), {{g.id("v_Max"), Rational(1, 2)}});
  EXPECT_THROW(validate(g, r), DomainError);
  r.set(g.id("v_Min"), {{g.id("v_Max"), Rational(1, 2)}, {g.id("v_Max"), Rational(1, 2)}});
  EXPECT_THROW(validate(g, r), DomainError);
  r.set(g.id("v_Min"), {{g.id("v_Min"), Rational(1)}});
  EXPECT_THROW(validate(g, r), DomainError);
}

TEST(Bound, Figure2AtV2) {
  GameGraph g = fig(2);
  GraphParams p = graph_params(g, true);
  ProbabilityBound b = probability_bound(p, g.num_vertices(), -8, Rational(1, 10));
  EXPECT_EQ(b.a, 12);
  EXPECT_EQ(b.b, 257);
  EXPECT_EQ(b.p_min, 1 - Rational(1, 10) / Rational(81 * pow2(271)));
}

TEST(Bound, Figure1ExactParams) {
  GameGraph g = fig(1);
  ProbabilityBound b = probability_bound(graph_params(g, true), 3, -10, Rational(1, 10));
  EXPECT_EQ(b.a, 2);
  EXPECT_EQ(b.b_ceil(), 85);
  EXPECT_LT(b.p_min, 1);
  EXPECT_GT(b.p_min, Rational(999, 1000));
}

TEST(Bound, NoNonNegativeCycles) {
  GraphParams p;
  p.max_abs_weight = 2;
  p.cycle_length = 1;
  p.neg_cycle_gap = 1;
  p.nonneg_cycle_max = 0;
  EXPECT_EQ(probability_bound(p, 2, 0, Rational(1)).a, 1);
}

TEST(Bound, MonotoneInEpsilon) {
  GraphParams p = graph_params(fig(2), false);
  Rational prev = 0;
  for (long d : {1L, 2L, 4L, 8L}) {
    Rational cur = probability_bound(p, 5, -8, Rational(1, d)).p_min;
    EXPECT_GE(cur, prev);
    prev = cur;
  }
  EXPECT_THROW(probability_bound(p, 5, -8, Rational(0)), DomainError);
}

TEST(Synthesis, Figure2) {
  GameGraph g = fig(2);
  SynthesisOptions o;
  o.v0 = g.id("v2");
  o.exact_params = true;
  Synthesis s = synthesize_epsilon_optimal(g, solve_values(g), 0, Rational(1, 10), o);
  EXPECT_EQ(s.bound.dval_sigma_v0, -8);
  EXPECT_EQ(s.bound.b, 257);
  EXPECT_TRUE(check_almost_sure_reach(g, s.rho));
  EXPECT_EQ(s.rho.prob(g.id("v1"), g.id("v0")), s.bound.p_min);
}

TEST(Synthesis, RejectsPlusInfinity) {
  GameGraph g = parse_game("min a\ntarget t\nmin b\nedge a a 0\nedge b t 0\n");
  EXPECT_THROW(synthesize_epsilon_optimal(g, solve_values(g), 0, Rational(1)), DomainError);
}

TEST(AlmostSure, Examples) {
  GameGraph g = fig(1);
  RandStrategy dirac_max(3);
  dirac_max.set(g.id("v_Min"), {{g.id("v_Max"), Rational(1)}});
  EXPECT_FALSE(check_almost_sure_reach(g, dirac_max));
  EXPECT_EQ(largest_trap(g, dirac_max).size(), 2u);

  RandStrategy half(3);
  half.set(g.id("v_Min"), {{g.id("v_Max"), Rational(1, 2)}, {g.id("smiley"), Rational(1, 2)}});
  EXPECT_TRUE(check_almost_sure_reach(g, half));
  EXPECT_TRUE(check_almost_sure_reach(g, dirac(g, pure(g, {{"v_Min", "smiley"}}))));
}
