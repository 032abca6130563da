#pragma once

#include <cstddef>
#include <vector>

#include "spg/det_strategies.hpp"
#include "spg/game.hpp"
#include "spg/markov.hpp"
#include "spg/rand_strategies.hpp"

namespace spg {

/// The game where each Min vertex keeps only the support successors that
/// minimise weight + expected value.
struct RestrictedGame {
  GameGraph base;
  std::vector<std::vector<VertexId>> allowed;

  /// Edge filter: Min vertices use `allowed`, Max keeps every edge.
  bool keeps(VertexId u, VertexId v) const;
};

RestrictedGame restricted_game(const GameGraph& g, const RandStrategy& rho,
                               const ExpectationVector& mvals);

/// Attractor distances in the support graph of rho (one support successor
/// suffices for Min, Max needs all). Throws DomainError if a vertex is not
/// attracted.
std::vector<std::size_t> support_distances(const GameGraph& g, const RandStrategy& rho);

/// Allowed successor of least distance, smallest id on ties.
PureStrategy sigma1_from_rho(const RestrictedGame& rg, const std::vector<std::size_t>& d);

/// max(0, |V|W - floor(m)) |V| + 1.
BigInt conversion_alpha(const GameGraph& g, const Rational& mval_v0);

/// Deterministic switching strategy doing at least as well as rho from v0.
SwitchingStrategy convert(const GameGraph& g, const RandStrategy& rho, VertexId v0);
SwitchingStrategy convert(const GameGraph& g, const RandStrategy& rho,
                          const ExpectationVector& mvals, VertexId v0);

}  // namespace spg
