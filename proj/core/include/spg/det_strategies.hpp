#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "spg/game.hpp"
#include "spg/strategy.hpp"
#include "spg/values.hpp"

namespace spg {

/// Distance to the target set (nullopt outside the attractor) and the Min
/// strategy that decreases it by one at every step.
struct AttractorResult {
  std::vector<std::optional<std::size_t>> distance;
  PureStrategy strategy;

  bool covers_all() const;
};

/// Edge filter used by the generic attractor: keep(src, dst).
using EdgeFilter = std::function<bool(VertexId, VertexId)>;

/// Classical backward attractor. With `restricted_to`, Min vertices may only
/// use their allowed successors; Max keeps all edges.
AttractorResult attractor(const GameGraph& g,
                          const std::optional<PermissiveEdges>& restricted_to = std::nullopt);

/// Attractor where both players are limited to edges accepted by `keep`.
/// Min enters as soon as one kept edge leads inside, Max once all kept edges
/// do (a Max vertex with no kept edge never enters). distance(Max) is
/// 1 + the largest successor distance; Min's strategy picks a successor at
/// distance d-1, smallest id first.
AttractorResult attractor(const GameGraph& g, const EdgeFilter& keep);

/// Deterministic strategy whose conforming cycles are all negative and whose
/// conforming target-reaching plays never exceed the game value. Requires no
/// +inf value; vertices at -inf get a strategy keeping every cycle negative
/// inside the -inf region.
PureStrategy fake_optimal_nc_strategy(const GameGraph& g, const ValueVector& vals);

/// True iff every cycle of g with Min vertices restricted to s has negative
/// weight. Min vertices without a choice keep no edges.
bool verify_nc(const GameGraph& g, const PureStrategy& s);

/// Supremum of TP over plays conforming to s that reach the target; -inf if
/// no such play exists. Requires verify_nc(g, s).
std::vector<ExtValue> fake_values(const GameGraph& g, const PureStrategy& s);

/// Play sigma1 for the first alpha steps, sigma2 afterwards.
struct SwitchingStrategy {
  PureStrategy sigma1;
  PureStrategy sigma2;
  mpz_class alpha;

  friend bool operator==(const SwitchingStrategy& a, const SwitchingStrategy& b) {
    return a.sigma1 == b.sigma1 && a.sigma2 == b.sigma2 && a.alpha == b.alpha;
  }
};

/// (2W(|V|-1) + n)|V| + 1.
mpz_class switching_alpha(const GameGraph& g, const mpz_class& n);

/// Throws DomainError if some vertex has value +inf.
SwitchingStrategy switching_strategy(const GameGraph& g, const ValueVector& vals,
                                     const mpz_class& n);

inline constexpr std::size_t kDefaultAlphaCap = 1'000'000;

/// Worst case over Max of TP against a fixed Min strategy: +inf where Max can
/// avoid the target.
std::vector<ExtValue> eval_deterministic_all(const GameGraph& g, const PureStrategy& s);
ExtValue eval_deterministic(const GameGraph& g, const PureStrategy& s, VertexId v0);

/// Same for a switching strategy, by unrolling the step counter up to alpha.
/// Throws CapExceeded when alpha > cap.
std::vector<ExtValue> eval_deterministic_all(const GameGraph& g, const SwitchingStrategy& s,
                                             std::size_t cap = kDefaultAlphaCap);
ExtValue eval_deterministic(const GameGraph& g, const SwitchingStrategy& s, VertexId v0,
                            std::size_t cap = kDefaultAlphaCap);

}  // namespace spg
