#include <benchmark/benchmark.h>

#include "spg/det_strategies.hpp"
#include "spg/game_io.hpp"
#include "spg/markov.hpp"
#include "spg/rand_strategies.hpp"
#include "spg/simulate.hpp"
#include "spg/values.hpp"
#include "spg/verify/corpus.hpp"

using namespace spg;

namespace {

// Chain of k gadgets like figure 1, each feeding the next.
GameGraph ladder(int k) {
  GameBuilder b;
  VertexId t = b.target("t");
  VertexId next = t;
  for (int i = k - 1; i >= 0; --i) {
    VertexId mn = b.min("m" + std::to_string(i));
    VertexId mx = b.max("x" + std::to_string(i));
    b.edge(mn, mx, 0).edge(mx, mn, -1).edge(mx, next, -3).edge(mn, next, 0);
    next = mn;
  }
  return b.build();
}

void BM_SolveValues(benchmark::State& state) {
  GameGraph g = ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_values(g));
}
BENCHMARK(BM_SolveValues)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_PolicyIteration(benchmark::State& state) {
  GameGraph g = ladder(static_cast<int>(state.range(0)));
  ValueVector v = solve_values(g);
  SwitchingStrategy s = switching_strategy(g, v, 0);
  RandStrategy rho = build_rho_p(g, s.sigma1, s.sigma2, Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(max_best_response(g, rho));
}
BENCHMARK(BM_PolicyIteration)->Arg(2)->Arg(4)->Arg(8);

void BM_Simulate(benchmark::State& state) {
  auto chains = verify::sample_chains(2024, 1);
  const auto& c = chains.front();
  SimConfig cfg{1, static_cast<std::size_t>(state.range(0)), 100'000};
  for (auto _ : state) benchmark::DoNotOptimize(simulate(c.chain, c.v0, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(1000)->Arg(10000);

void BM_Corpus(benchmark::State& state) {
  verify::CorpusOptions o;
  o.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_corpus(o));
}
BENCHMARK(BM_Corpus)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
