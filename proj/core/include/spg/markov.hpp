#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spg/game.hpp"
#include "spg/rand_strategies.hpp"
#include "spg/rational.hpp"
#include "spg/strategy.hpp"

namespace spg {

struct Transition {
  VertexId dst = 0;
  Rational prob;
  Weight weight = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Finite Markov chain with weighted transitions. Target vertices are
/// absorbing and have no outgoing transitions.
struct MarkovChain {
  std::vector<std::vector<Transition>> transitions;
  std::vector<bool> target;

  std::size_t size() const { return target.size(); }
};

/// G^{rho,tau}: rho's distributions at Min vertices, Dirac on tau at Max.
MarkovChain build_mc(const GameGraph& g, const RandStrategy& rho, const MaxPureStrategy& tau);

/// Vertices from which the target is reached with probability 1.
std::vector<bool> almost_sure_reach(const MarkovChain& mc);

/// Expected total payoff per vertex; nullopt where the target is not reached
/// almost surely (the value is +inf there for a worst-case Max).
struct ExpectationVector {
  std::vector<std::optional<Rational>> values;
  std::string diagnostic;

  bool all_defined() const;
  const std::optional<Rational>& operator[](VertexId v) const { return values.at(v); }
  std::size_t size() const { return values.size(); }

  friend bool operator==(const ExpectationVector& a, const ExpectationVector& b) {
    return a.values == b.values;
  }
};

/// Exact solution of E_v = sum P(v,v')(w(v,v') + E_v') (0 on targets) over
/// the almost-surely reaching vertices.
ExpectationVector solve_expectations(const MarkovChain& mc);

/// Largest |left - right| over the Bellman equations of the defined entries.
Rational bellman_residual(const MarkovChain& mc, const ExpectationVector& e);

struct BestResponse {
  MaxPureStrategy tau;
  ExpectationVector values;
  std::size_t rounds = 0;
};

/// Policy iteration over Max positional strategies. Requires
/// check_almost_sure_reach(g, rho). When `trace` is set, the expectation
/// vector of every round is appended to it.
BestResponse max_best_response(const GameGraph& g, const RandStrategy& rho,
                               std::vector<ExpectationVector>* trace = nullptr);

inline constexpr std::size_t kDefaultMaxEnumerationCap = 100'000;

/// Componentwise maximum of the expectations over every Max positional
/// strategy; a vertex not reaching the target a.s. under some strategy is
/// nullopt (+inf). Throws CapExceeded when there are more than `cap`
/// strategies.
ExpectationVector enumerate_max_oracle(const GameGraph& g, const RandStrategy& rho,
                                       std::size_t cap = kDefaultMaxEnumerationCap);

}  // namespace spg
