#pragma once

#include <cstddef>
#include <cstdint>

#include "spg/game.hpp"
#include "spg/markov.hpp"

namespace spg {

struct SimConfig {
  std::uint64_t seed = 1;
  std::size_t episodes = 10'000;
  std::size_t step_cap = 100'000;
};

struct SimReport {
  /// Mean and standard error of TP over the episodes that reached the target.
  double mean_tp = 0;
  double stderr_tp = 0;
  double reach_fraction = 0;
  std::size_t truncated = 0;
  std::size_t episodes = 0;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Samples episodes from v0 with std::mt19937_64 seeded by cfg.seed. Each
/// step draws a 512-bit uniform integer and compares it exactly against the
/// cumulative probabilities scaled by 2^512 (rounded up).
SimReport simulate(const MarkovChain& mc, VertexId v0, const SimConfig& cfg);

}  // namespace spg
