#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "spg/game.hpp"
#include "spg/rand_strategies.hpp"
#include "spg/strategy.hpp"
#include "spg/values.hpp"

namespace spg::verify {

inline constexpr std::size_t kDefaultEnumerationCap = 200'000;

/// Calls f for every positional strategy of `Player` (lexicographic over
/// successor lists). Throws CapExceeded beyond `cap` strategies.
void for_each_min_strategy(const GameGraph& g, const std::function<void(const PureStrategy&)>& f,
                           std::size_t cap = kDefaultEnumerationCap);
void for_each_max_strategy(const GameGraph& g,
                           const std::function<void(const MaxPureStrategy&)>& f,
                           std::size_t cap = kDefaultEnumerationCap);

/// Shortest distance to the target when Max is fixed to tau: +inf if the
/// target is unreachable, -inf if a negative cycle can be pumped on the way.
std::vector<ExtValue> one_player_min_values(const GameGraph& g, const MaxPureStrategy& tau);

/// Game values as the best Max positional strategy against Min's shortest
/// paths. Independent of value iteration.
std::vector<ExtValue> oracle_values(const GameGraph& g, std::size_t cap = kDefaultEnumerationCap);

/// Worst case over Max positional strategies of the single play followed
/// against a pure Min strategy (+inf when it loops).
std::vector<ExtValue> oracle_eval_pure(const GameGraph& g, const PureStrategy& s,
                                       std::size_t cap = kDefaultEnumerationCap);

/// A pure memoryless Min strategy achieving `values` everywhere, if any.
std::optional<PureStrategy> brute_force_optimal(const GameGraph& g,
                                                const std::vector<ExtValue>& values,
                                                std::size_t cap = kDefaultEnumerationCap);

/// Every elementary cycle (Min restricted by keep) has weight < 0.
bool all_cycles_negative(const GameGraph& g,
                         const std::function<bool(VertexId, VertexId)>& keep);

/// Largest TP over plays reaching the target in at most `max_len` steps,
/// using only edges accepted by keep; -inf when there is none.
std::vector<ExtValue> longest_bounded_plays(const GameGraph& g,
                                            const std::function<bool(VertexId, VertexId)>& keep,
                                            std::size_t max_len);

}  // namespace spg::verify
