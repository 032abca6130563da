#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "spg/game.hpp"

namespace spg {

/// Strongly connected components in reverse topological order: every edge
/// leaving a component points to a component listed earlier.
std::vector<std::vector<VertexId>> sccs(const GameGraph& g);

/// Component index of each vertex, consistent with the order of sccs().
std::vector<std::size_t> scc_index(const GameGraph& g);

/// True iff some cycle using only edges inside `scc` has negative weight.
bool scc_has_negative_cycle(const GameGraph& g, std::span<const VertexId> scc);

/// Bellman-Ford negative-cycle detection over an explicit edge list on
/// vertices 0..n-1 (all vertices start at distance 0).
bool has_negative_cycle(std::size_t n, std::span<const Edge> edges);

/// Cycle parameters used by the probability bound.
struct GraphParams {
  Weight max_abs_weight = 0;  ///< W
  std::size_t cycle_length = 0;  ///< c, bound on the length of elementary cycles
  Weight neg_cycle_gap = 1;  ///< w-, every elementary negative cycle weighs <= -w-
  Weight nonneg_cycle_max = 0;  ///< w+, every elementary non-negative cycle weighs <= w+
  bool exact = false;

  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

inline constexpr std::size_t kDefaultExactParamsCap = 12;

/// Safe mode: c = |V|, w- = 1, w+ = |V|*W. Exact mode enumerates elementary
/// cycles and throws CapExceeded when |V| > cap. In exact mode an acyclic
/// graph reports c = 1 and a graph without negative cycles reports w- = 1.
GraphParams graph_params(const GameGraph& g, bool exact,
                         std::size_t cap = kDefaultExactParamsCap);

/// Calls `visit` once per elementary cycle (as the vertex sequence v0..vk,
/// without repeating v0) among the edges accepted by `keep`. Each cycle is
/// reported starting from its smallest vertex.
void for_each_elementary_cycle(
    const GameGraph& g, const std::function<bool(VertexId, VertexId)>& keep,
    const std::function<void(std::span<const VertexId>)>& visit);

}  // namespace spg
