#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "spg/game.hpp"
#include "spg/json_io.hpp"
#include "spg/markov.hpp"
#include "spg/rational.hpp"

namespace spg::verify {

struct GeneratorConfig {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 6;
  Weight max_weight = 3;
  std::size_t max_out_degree = 3;
};

/// Random valid game: at least one target, 1..max_out_degree distinct
/// successors per non-target vertex (half of them forced to include the first
/// target), weights uniform in [-W, W] for a W drawn in 1..max_weight.
GameGraph random_game(std::mt19937_64& rng, const GeneratorConfig& cfg = {});

/// The `count` games of a seeded corpus, each game from its own sub-seed.
std::vector<GameGraph> corpus(std::uint64_t seed, std::size_t count,
                              const GeneratorConfig& cfg = {});

/// Property names reported by run_corpus.
namespace prop {
inline constexpr const char* kRoundTrip = "serialization-roundtrip";
inline constexpr const char* kSafeParams = "safe-params-dominate";
inline constexpr const char* kValuesOracle = "values-match-oracle";
inline constexpr const char* kValuesBound = "finite-values-bounded";
inline constexpr const char* kMonotone = "iteration-monotone";
inline constexpr const char* kFixpoint = "values-fixpoint";
inline constexpr const char* kNcStrategy = "fake-optimal-nc";
inline constexpr const char* kFakeValue = "fake-value-below-value";
inline constexpr const char* kAttractor = "attractor-reaches-target";
inline constexpr const char* kSwitching = "switching-bound";
inline constexpr const char* kRhoSupport = "rho-support";
inline constexpr const char* kBoundMonotone = "p-min-monotone";
inline constexpr const char* kTargetProba1 = "almost-sure-reach";
inline constexpr const char* kPolicyOracle = "policy-iteration-matches-enumeration";
inline constexpr const char* kCyclesPositive = "nonneg-cycles-use-1-p-edge";
inline constexpr const char* kResidual = "bellman-residual-zero";
inline constexpr const char* kUpper = "rand-value-within-epsilon";
inline constexpr const char* kLower = "rand-value-at-least-value";
inline constexpr const char* kConversion = "conversion-no-worse";
inline constexpr const char* kNonPositivePlays = "restricted-plays-below-mval";
inline constexpr const char* kNonPositiveCycles = "restricted-cycles-nonpositive";
inline constexpr const char* kConvertedNc = "converted-sigma1-nc";
inline constexpr const char* kOptimality = "optimality-matches-brute-force";
inline constexpr const char* kOptimalExtract = "extracted-strategy-optimal";
inline constexpr const char* kCompletes = "pipeline-completes";
}  // namespace prop

struct PropertyResult {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool pass() const { return failed == 0; }
};

struct CorpusSummary {
  std::uint64_t seed = 0;
  std::size_t games = 0;
  std::map<std::string, PropertyResult> properties;

  bool pass() const;
  void record(const std::string& name, bool ok, const std::string& detail);
};

struct CorpusOptions {
  std::uint64_t seed = 2024;
  std::size_t count = 200;
  std::vector<Rational> epsilons{Rational(1), Rational(1, 4), Rational(1, 16)};
  GeneratorConfig generator;
};

/// Runs every property on every corpus game.
CorpusSummary run_corpus(const CorpusOptions& opts);

/// Same checks on a single game; results are added to `summary`.
void check_game(const GameGraph& g, const CorpusOptions& opts, CorpusSummary& summary,
                const std::string& label);

Json summary_to_json(const CorpusSummary& s);

/// A Markov chain drawn from a corpus game: rho_p for a moderate p against
/// Max's best response, with its exact expectation from v0.
struct SampleChain {
  GameGraph game;
  MarkovChain chain;
  VertexId v0 = 0;
  Rational p;
  Rational expected;
};

/// First `count` usable chains of the seeded corpus.
std::vector<SampleChain> sample_chains(std::uint64_t seed, std::size_t count,
                                       const GeneratorConfig& cfg = {});

}  // namespace spg::verify
