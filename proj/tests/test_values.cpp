#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spg/values.hpp"

using namespace spg;
using spg::testing::fig;

namespace {
ExtValue fin(Weight w) { return ExtValue::finite(w); }
}  // namespace

TEST(ApplyF, Figure1FirstStep) {
  GameGraph g = fig(1);
  ValueVector f0 = initial_values(g);
  EXPECT_EQ(f0[g.id("v_Min")], ExtValue::plus_inf());
  ValueVector f1 = apply_F(g, f0);
  EXPECT_EQ(f1.iteration, 1u);
  EXPECT_EQ(f1[g.id("v_Min")], fin(0));
  EXPECT_TRUE(f1[g.id("v_Max")].is_plus_inf());
  EXPECT_EQ(f1[g.id("smiley")], fin(0));
  ValueVector f2 = apply_F(g, f1);
  EXPECT_EQ(f2[g.id("v_Min")], fin(0));
  EXPECT_EQ(f2[g.id("v_Max")], fin(-1));
}

TEST(ApplyF, Figure3FirstStep) {
  GameGraph g = fig(3);
  ValueVector f1 = iterate_F(g, 1);
  EXPECT_EQ(f1[g.id("v0")], fin(0));
  EXPECT_EQ(f1[g.id("v1")], fin(-1));
}

TEST(ApplyF, FixpointUnchanged) {
  GameGraph g = fig(3);
  ValueVector v = solve_values(g);
  EXPECT_EQ(apply_F(g, v).values, v.values);
}

TEST(PlusInfinity, Classification) {
  EXPECT_TRUE(classify_plus_infinity(fig(1)).empty());
  GameGraph loop = parse_game("min a\ntarget t\nmin b\nedge a a 0\nedge b t 0\n");
  EXPECT_EQ(classify_plus_infinity(loop), std::vector<VertexId>{loop.id("a")});
  GameGraph sink = parse_game(
      "max m\nmax s1\nmax s2\ntarget t\n"
      "edge m t 0\nedge m s1 0\nedge s1 s2 1\nedge s2 s1 1\n");
  auto inf = classify_plus_infinity(sink);
  EXPECT_NE(std::find(inf.begin(), inf.end(), sink.id("m")), inf.end());
}

TEST(SolveValues, Figure1) {
  GameGraph g = fig(1);
  ValueVector v = solve_values(g);
  EXPECT_EQ(v[g.id("v_Min")], fin(-10));
  EXPECT_EQ(v[g.id("v_Max")], fin(-10));
  EXPECT_EQ(v[g.id("smiley")], fin(0));
}

TEST(SolveValues, Figure1WithoutExit) {
  GameGraph g = parse_game(
      "min v_Min\nmax v_Max\ntarget smiley\n"
      "edge v_Min v_Max 0\nedge v_Max v_Min -1\nedge v_Min smiley 0\n");
  ValueVector v = solve_values(g);
  EXPECT_TRUE(v[g.id("v_Min")].is_minus_inf());
  EXPECT_TRUE(v[g.id("v_Max")].is_minus_inf());
}

TEST(SolveValues, Figure2And3) {
  GameGraph g2 = fig(2);
  EXPECT_EQ(solve_values(g2)[g2.id("v2")], fin(-8));
  GameGraph g3 = fig(3);
  ValueVector v3 = solve_values(g3);
  EXPECT_EQ(v3[g3.id("v0")], fin(-2));
  EXPECT_EQ(v3[g3.id("v1")], fin(-1));
}

TEST(SolveValues, PlusInfinityKept) {
  GameGraph g = parse_game("min a\nmin b\ntarget t\nedge a a -1\nedge b t 2\n");
  ValueVector v = solve_values(g);
  EXPECT_TRUE(v[g.id("a")].is_plus_inf());
  EXPECT_EQ(v[g.id("b")], fin(2));
}

TEST(PermissiveEdges, Figure3AtFixpoint) {
  GameGraph g = fig(3);
  PermissiveEdges e = permissive_edges(g, 3);
  EXPECT_EQ(e.stage, 3u);
  EXPECT_EQ(e.allowed[g.id("v0")], std::vector<VertexId>{g.id("v1")});
  EXPECT_EQ(e.allowed[g.id("v1")], (std::vector<VertexId>{g.id("v0"), g.id("smiley")}));
}

TEST(PermissiveEdges, Figure1) {
  GameGraph g = fig(1);
  ValueVector v = solve_values(g);
  PermissiveEdges e = permissive_edges(g, v, apply_F(g, v));
  const auto& a = e.allowed[g.id("v_Min")];
  EXPECT_NE(std::find(a.begin(), a.end(), g.id("v_Max")), a.end());
}

TEST(PermissiveEdges, UniqueSuccessor) {
  GameGraph g = parse_game("min a\ntarget t\nedge a t 5\n");
  EXPECT_EQ(permissive_edges(g, 1).allowed[0], std::vector<VertexId>{1});
}

TEST(Prune, RemovesPlusInfinity) {
  GameGraph g = parse_game("min a\nmin b\ntarget t\nedge a a -1\nedge b t 2\nedge b a 0\n");
  PrunedGame p = prune_plus_infinity(g);
  EXPECT_EQ(p.game.num_vertices(), 2u);
  EXPECT_FALSE(p.from_original[g.id("a")]);
  EXPECT_EQ(p.game.num_edges(), 1u);
}
