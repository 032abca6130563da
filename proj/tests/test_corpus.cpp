#include <gtest/gtest.h>

#include "spg/game_io.hpp"
#include "spg/verify/corpus.hpp"
#include "spg/verify/oracles.hpp"

using namespace spg;
using namespace spg::verify;

TEST(Corpus, Deterministic) {
  EXPECT_EQ(corpus(11, 15), corpus(11, 15));
  EXPECT_NE(corpus(11, 15), corpus(12, 15));
}

TEST(Corpus, GamesRespectConfig) {
  GeneratorConfig cfg;
  for (const GameGraph& g : corpus(3, 50, cfg)) {
    EXPECT_GE(g.num_vertices(), cfg.min_vertices);
    EXPECT_LE(g.num_vertices(), cfg.max_vertices);
    EXPECT_LE(g.max_abs_weight(), cfg.max_weight);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      EXPECT_LE(g.successors(v).size(), cfg.max_out_degree);
    }
  }
}

TEST(Corpus, SmallRunPasses) {
  CorpusOptions o;
  o.seed = 99;
  o.count = 25;
  CorpusSummary s = run_corpus(o);
  for (const auto& [name, r] : s.properties) {
    EXPECT_TRUE(r.pass()) << name << ": " << r.first_failure;
  }
  EXPECT_TRUE(s.pass());
  EXPECT_EQ(summary_to_json(s), summary_to_json(run_corpus(o)));
}

TEST(Oracles, Figure1Values) {
  GameGraph g = parse_game(
      "min v_Min\nmax v_Max\ntarget smiley\n"
      "edge v_Min v_Max 0\nedge v_Max v_Min -1\nedge v_Max smiley -10\nedge v_Min smiley 0\n");
  auto v = oracle_values(g);
  EXPECT_EQ(v[0], ExtValue::finite(-10));
  EXPECT_EQ(v[1], ExtValue::finite(-10));
  EXPECT_FALSE(brute_force_optimal(g, v).has_value());
}

TEST(Oracles, SampleChains) {
  auto chains = sample_chains(2024, 5);
  ASSERT_EQ(chains.size(), 5u);
  for (const auto& c : chains) EXPECT_FALSE(c.chain.target[c.v0]);
}
