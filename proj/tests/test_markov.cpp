#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spg/markov.hpp"

using namespace spg;
using spg::testing::fig;

namespace {

// Figure 1 with Min choosing v_Max w.p. p and Max returning to v_Min w.p. q.
MarkovChain fig1_chain(const Rational& p, const Rational& q) {
  MarkovChain mc;
  mc.target = {false, false, true};
  mc.transitions.resize(3);
  mc.transitions[0] = {{1, p, 0}, {2, 1 - p, 0}};
  mc.transitions[1] = {{0, q, -1}, {2, 1 - q, -10}};
  return mc;
}

RandStrategy rho_prime(const GameGraph& g, const Rational& p) {
  RandStrategy r(g.num_vertices());
  r.set(g.id("v0"), {{g.id("v1"), p}, {g.id("smiley"), 1 - p}});
  r.set(g.id("v1"), {{g.id("smiley"), p}, {g.id("v0"), 1 - p}});
  return r;
}

RandStrategy rho_second(const GameGraph& g, const Rational& p) {
  RandStrategy r(g.num_vertices());
  r.set(g.id("v0"), {{g.id("v1"), Rational(1)}});
  r.set(g.id("v1"), {{g.id("v0"), 1 - p}, {g.id("smiley"), p}});
  return r;
}

RandStrategy fig1_rho(const GameGraph& g, const Rational& p) {
  RandStrategy r(g.num_vertices());
  r.set(g.id("v_Min"), {{g.id("v_Max"), p}, {g.id("smiley"), 1 - p}});
  return r;
}

}  // namespace

TEST(Expectations, Figure1ClosedForm) {
  const std::vector<std::pair<Rational, Rational>> pairs = {
      {Rational(1, 3), Rational(1)}, {Rational(1, 2), Rational(1, 2)},
      {Rational(9, 10), Rational(0)}, {Rational(2, 3), Rational(3, 4)},
      {Rational(0), Rational(1)}};
  for (const auto& [p, q] : pairs) {
    ExpectationVector e = solve_expectations(fig1_chain(p, q));
    Rational x = p * (9 * q - 10) / (1 - p * q);
    ASSERT_TRUE(e.all_defined());
    EXPECT_EQ(*e[0], x);
    EXPECT_EQ(*e[1], q * (x - 1) + (1 - q) * -10);
    EXPECT_EQ(*e[2], 0);
    EXPECT_EQ(bellman_residual(fig1_chain(p, q), e), 0);
  }
  ExpectationVector third = solve_expectations(fig1_chain(Rational(1, 3), 1));
  EXPECT_EQ(*third[0], Rational(-1, 2));
  EXPECT_EQ(*third[1], Rational(-3, 2));
}

TEST(Expectations, UndefinedWithoutAlmostSureReach) {
  ExpectationVector e = solve_expectations(fig1_chain(1, 1));
  EXPECT_FALSE(e[0]);
  EXPECT_FALSE(e[1]);
  EXPECT_FALSE(e.all_defined());
  EXPECT_EQ(almost_sure_reach(fig1_chain(1, 1)), (std::vector<bool>{false, false, true}));
}

TEST(Expectations, Figure3RhoPrime) {
  GameGraph g = fig(3);
  for (Rational p : {Rational(1, 2), Rational(1, 3), Rational(9, 10)}) {
    ExpectationVector e = solve_expectations(build_mc(g, rho_prime(g, p), MaxPureStrategy(3)));
    Rational den = 1 - p * (1 - p);
    EXPECT_EQ(*e[g.id("v0")], -2 * p * p / den);
    EXPECT_EQ(*e[g.id("v1")], (p * p - 3 * p + 1) / den);
  }
}

TEST(Expectations, Figure3RhoSecond) {
  GameGraph g = fig(3);
  for (Rational p : {Rational(1, 5), Rational(1, 2), Rational(1)}) {
    ExpectationVector e = solve_expectations(build_mc(g, rho_second(g, p), MaxPureStrategy(3)));
    EXPECT_EQ(*e[g.id("v0")], -2);
    EXPECT_EQ(*e[g.id("v1")], -1);
  }
}

TEST(BestResponse, Figure1Threshold) {
  GameGraph g = fig(1);
  for (Rational p : {Rational(1, 3), Rational(1, 2), Rational(89, 100)}) {
    BestResponse br = max_best_response(g, fig1_rho(g, p));
    EXPECT_EQ(br.tau(g.id("v_Max")), g.id("v_Min"));
    EXPECT_EQ(*br.values[g.id("v_Min")], -p / (1 - p));
  }
  for (Rational p : {Rational(9, 10), Rational(99, 100)}) {
    BestResponse br = max_best_response(g, fig1_rho(g, p));
    EXPECT_EQ(br.tau(g.id("v_Max")), g.id("smiley"));
    EXPECT_EQ(*br.values[g.id("v_Min")], -10 * p);
  }
}

TEST(BestResponse, MatchesEnumeration) {
  GameGraph g = fig(1);
  RandStrategy r = fig1_rho(g, Rational(1, 3));
  ExpectationVector oracle = enumerate_max_oracle(g, r);
  EXPECT_EQ(*oracle[g.id("v_Min")], Rational(-1, 2));
  EXPECT_EQ(*oracle[g.id("v_Max")], Rational(-3, 2));
  EXPECT_EQ(max_best_response(g, r).values, oracle);
}

TEST(BestResponse, TraceIsMonotone) {
  GameGraph g = fig(2);
  RandStrategy r(5);
  r.set(g.id("v1"), {{g.id("v0"), Rational(1, 2)}, {g.id("v2"), Rational(1, 2)}});
  r.set(g.id("v3"), {{g.id("v1"), Rational(1, 2)}, {g.id("T"), Rational(1, 2)}});
  std::vector<ExpectationVector> trace;
  BestResponse br = max_best_response(g, r, &trace);
  ASSERT_FALSE(trace.empty());
  EXPECT_EQ(trace.back(), br.values);
  for (std::size_t i = 1; i < trace.size(); ++i) {
    for (VertexId v = 0; v < 5; ++v) EXPECT_GE(*trace[i][v], *trace[i - 1][v]);
  }
  EXPECT_EQ(br.values, enumerate_max_oracle(g, r));
}

TEST(BestResponse, RequiresAlmostSureReach) {
  GameGraph g = fig(1);
  RandStrategy r(3);
  r.set(g.id("v_Min"), {{g.id("v_Max"), Rational(1)}});
  EXPECT_THROW(max_best_response(g, r), DomainError);
}

TEST(Oracle, Cap) {
  GameGraph g = fig(2);
  RandStrategy r(5);
  r.set(g.id("v1"), {{g.id("v0"), Rational(1)}});
  r.set(g.id("v3"), {{g.id("T"), Rational(1)}});
  EXPECT_THROW(enumerate_max_oracle(g, r, 1), CapExceeded);
}
