#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spg/det_strategies.hpp"
#include "spg/game.hpp"
#include "spg/graph_analysis.hpp"
#include "spg/rational.hpp"
#include "spg/values.hpp"

namespace spg {

struct Outcome {
  VertexId succ = 0;
  Rational prob;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Memoryless randomised Min strategy: a distribution per Min vertex, empty
/// lists elsewhere.
class RandStrategy {
 public:
  RandStrategy() = default;
  explicit RandStrategy(std::size_t num_vertices) : dist_(num_vertices) {}

  std::size_t size() const { return dist_.size(); }
  const std::vector<Outcome>& at(VertexId v) const { return dist_.at(v); }
  void set(VertexId v, std::vector<Outcome> d) { dist_.at(v) = std::move(d); }

  /// Successors with positive probability, in stored order.
  std::vector<VertexId> support(VertexId v) const;
  bool in_support(VertexId v, VertexId succ) const;
  /// 0 for successors outside the support.
  Rational prob(VertexId v, VertexId succ) const;

  friend bool operator==(const RandStrategy&, const RandStrategy&) = default;

 private:
  std::vector<std::vector<Outcome>> dist_;
};

/// Dirac distributions on the choices of a pure strategy.
RandStrategy dirac(const GameGraph& g, const PureStrategy& s);

/// Throws DomainError unless every Min vertex has a distribution over
/// distinct successors with positive probabilities summing to exactly 1.
void validate(const GameGraph& g, const RandStrategy& rho);

/// sigma1 w.p. p and sigma2 w.p. 1-p in SCCs holding a negative cycle,
/// Dirac on sigma1 elsewhere (and wherever both choices agree).
RandStrategy build_rho_p(const GameGraph& g, const PureStrategy& sigma1,
                         const PureStrategy& sigma2, const Rational& p);

struct ProbabilityBound {
  BigInt a;
  Rational b;
  Rational p_min;
  Rational epsilon;
  Weight dval_sigma_v0 = 0;

  /// b rounded up, as used in the exponents.
  BigInt b_ceil() const { return ceil(b); }
};

ProbabilityBound probability_bound(const GraphParams& params, std::size_t nvertices,
                                   Weight dval_sigma_v0, const Rational& epsilon);

struct SynthesisOptions {
  /// Vertex the bound is computed for; all non-target vertices if unset.
  std::optional<VertexId> v0;
  bool exact_params = false;
  std::size_t exact_params_cap = kDefaultExactParamsCap;
  std::size_t alpha_cap = kDefaultAlphaCap;
};

struct Synthesis {
  RandStrategy rho;
  ProbabilityBound bound;
  SwitchingStrategy switching;
  GraphParams params;
  /// Vertex whose bound determined p (the largest p_min when v0 is unset).
  VertexId v0 = 0;
};

/// Builds rho_p from the switching strategy for n with p = p_min(epsilon).
/// Requires no +inf value and epsilon > 0.
Synthesis synthesize_epsilon_optimal(const GameGraph& g, const ValueVector& vals,
                                     const BigInt& n, const Rational& epsilon,
                                     const SynthesisOptions& opts = {});

/// Largest target-free set where Max can stay and Min's support stays inside.
std::vector<VertexId> largest_trap(const GameGraph& g, const RandStrategy& rho);

/// True iff the target is reached with probability 1 from every vertex
/// against every Max positional strategy.
bool check_almost_sure_reach(const GameGraph& g, const RandStrategy& rho);

}  // namespace spg
