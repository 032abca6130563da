#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spg/game.hpp"

namespace spg {

/// Deterministic memoryless strategy of one player: a successor for each of
/// that player's vertices.
template <Owner Player>
class PositionalStrategy {
 public:
  PositionalStrategy() = default;
  explicit PositionalStrategy(std::size_t num_vertices) : choice_(num_vertices) {}

  std::size_t size() const { return choice_.size(); }

  const std::optional<VertexId>& at(VertexId v) const { return choice_.at(v); }

  /// Chosen successor of v; throws if v has no choice recorded.
  VertexId operator()(VertexId v) const {
    const auto& c = choice_.at(v);
    if (!c) throw DomainError("strategy undefined at vertex " + std::to_string(v));
    return *c;
  }

  void set(VertexId v, VertexId succ) { choice_.at(v) = succ; }

  friend bool operator==(const PositionalStrategy&, const PositionalStrategy&) = default;

 private:
  std::vector<std::optional<VertexId>> choice_;
};

using PureStrategy = PositionalStrategy<Owner::Min>;
using MaxPureStrategy = PositionalStrategy<Owner::Max>;

/// Throws DomainError unless s has an edge-respecting choice at every vertex
/// owned by Player.
template <Owner Player>
void validate(const GameGraph& g, const PositionalStrategy<Player>& s) {
  if (s.size() != g.num_vertices()) throw DomainError("strategy size does not match the game");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.owner(v) != Player) continue;
    const auto& c = s.at(v);
    if (!c) throw DomainError("strategy undefined at '" + g.name(v) + "'");
    if (!g.has_edge(v, *c)) {
      throw DomainError("strategy picks non-edge " + g.name(v) + " -> " + g.name(*c));
    }
  }
}

}  // namespace spg
