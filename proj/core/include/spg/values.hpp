#pragma once

#include <cstddef>
#include <vector>

#include "spg/ext_value.hpp"
#include "spg/game.hpp"

namespace spg {

/// Per-vertex values together with the number of operator applications that
/// produced them.
struct ValueVector {
  std::vector<ExtValue> values;
  std::size_t iteration = 0;

  const ExtValue& operator[](VertexId v) const { return values.at(v); }
  std::size_t size() const { return values.size(); }
  bool all_finite() const;

  friend bool operator==(const ValueVector&, const ValueVector&) = default;
};

/// f^(0): 0 on targets, +inf elsewhere.
ValueVector initial_values(const GameGraph& g);

/// One application of the value-iteration operator:
/// 0 on targets, min (Min) / max (Max) over successors of weight + x.
ValueVector apply_F(const GameGraph& g, const ValueVector& x);

/// f^(i), i.e. apply_F applied i times to initial_values(g).
ValueVector iterate_F(const GameGraph& g, std::size_t i);

/// Vertices from which Min cannot force a visit to a target (value +inf).
std::vector<VertexId> classify_plus_infinity(const GameGraph& g);

/// Number of operator applications after which any vertex still below
/// -(|V|-1)W is classified -inf.
std::size_t minus_infinity_horizon(const GameGraph& g);

/// Deterministic game values: +inf via the Min attractor, -inf via the
/// iteration cutoff, and finite values from the stationary iterate.
ValueVector solve_values(const GameGraph& g);

/// Most permissive Min successors at stage i: for each Min vertex v with a
/// finite f^(i)_v, the successors v' with weight(v,v') + f^(i-1)_{v'} = f^(i)_v.
/// Other vertices get an empty set.
struct PermissiveEdges {
  std::vector<std::vector<VertexId>> allowed;
  std::size_t stage = 0;
};

PermissiveEdges permissive_edges(const GameGraph& g, std::size_t stage);

/// Same, from explicit consecutive iterates (prev = f^(i-1), cur = f^(i)).
PermissiveEdges permissive_edges(const GameGraph& g, const ValueVector& prev,
                                 const ValueVector& cur);

/// Game with the +inf vertices removed. Min vertices lose their edges into
/// removed vertices; no Max vertex of finite value has such an edge.
struct PrunedGame {
  GameGraph game;
  std::vector<VertexId> to_original;
  std::vector<std::optional<VertexId>> from_original;
};

PrunedGame prune_plus_infinity(const GameGraph& g);

}  // namespace spg
