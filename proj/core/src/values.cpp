#include "spg/values.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace spg {

namespace {

// Min attractor of the targets (membership only).
std::vector<bool> min_attractor(const GameGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<VertexId>> preds(n);
  std::vector<std::size_t> pending(n, 0);
  for (const Edge& e : g.edges()) {
    preds[e.dst].push_back(e.src);
    ++pending[e.src];
  }
  std::vector<bool> in(n, false);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (g.is_target(v)) {
      in[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId p : preds[u]) {
      if (in[p]) continue;
      if (g.is_min(p) || --pending[p] == 0) {
        in[p] = true;
        queue.push_back(p);
      }
    }
  }
  return in;
}

}  // namespace

bool ValueVector::all_finite() const {
  return std::all_of(values.begin(), values.end(), [](const ExtValue& x) { return x.is_finite(); });
}

ValueVector initial_values(const GameGraph& g) {
  ValueVector f;
  f.values.resize(g.num_vertices(), ExtValue::plus_inf());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.is_target(v)) f.values[v] = ExtValue::finite(0);
  }
  return f;
}

ValueVector apply_F(const GameGraph& g, const ValueVector& x) {
  ValueVector y;
  y.iteration = x.iteration + 1;
  y.values.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.is_target(v)) {
      y.values[v] = ExtValue::finite(0);
      continue;
    }
    const bool minimize = g.is_min(v);
    std::optional<ExtValue> best;
    for (const Arc& a : g.successors(v)) {
      ExtValue cand = x.values[a.dst].plus(a.weight);
      if (!best || (minimize ? cand < *best : cand > *best)) best = cand;
    }
    y.values[v] = *best;
  }
  return y;
}

ValueVector iterate_F(const GameGraph& g, std::size_t i) {
  ValueVector f = initial_values(g);
  for (std::size_t k = 0; k < i; ++k) f = apply_F(g, f);
  return f;
}

std::vector<VertexId> classify_plus_infinity(const GameGraph& g) {
  auto in = min_attractor(g);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

std::size_t minus_infinity_horizon(const GameGraph& g) {
  // A switching strategy with target -((|V|-1)W + 1) reaches the target
  // within (3(|V|-1)W + 1)|V| + 1 + |V| steps from every -inf vertex, so the
  // truncated value there is already below -(|V|-1)W at this horizon.
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  const auto w = static_cast<std::size_t>(g.max_abs_weight());
  return (3 * (n - 1) * w + 1) * n + 1 + n;
}

ValueVector solve_values(const GameGraph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t horizon = minus_infinity_horizon(g);
  ValueVector x = initial_values(g);
  for (std::size_t i = 0; i < horizon; ++i) {
    ValueVector y = apply_F(g, x);
    if (y.values == x.values) return y;
    x = std::move(y);
  }

  const Weight floor = -static_cast<Weight>(n - 1) * g.max_abs_weight();
  for (ExtValue& v : x.values) {
    if (v.is_finite() && v.value() < floor) v = ExtValue::minus_inf();
  }
  // The finite part is bounded below by the game value, so the iteration
  // with -inf vertices pinned reaches a fixpoint.
  for (std::size_t i = 0; i <= horizon; ++i) {
    ValueVector y = apply_F(g, x);
    if (y.values == x.values) return y;
    x = std::move(y);
  }
  throw std::logic_error("value iteration did not stabilise after -inf classification");
}

PermissiveEdges permissive_edges(const GameGraph& g, const ValueVector& prev,
                                 const ValueVector& cur) {
  PermissiveEdges out;
  out.stage = cur.iteration;
  out.allowed.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_min(v) || !cur[v].is_finite()) continue;
    for (const Arc& a : g.successors(v)) {
      if (prev[a.dst].plus(a.weight) == cur[v]) out.allowed[v].push_back(a.dst);
    }
    std::sort(out.allowed[v].begin(), out.allowed[v].end());
  }
  return out;
}

PermissiveEdges permissive_edges(const GameGraph& g, std::size_t stage) {
  if (stage == 0) throw DomainError("permissive edges need a stage >= 1");
  ValueVector prev = iterate_F(g, stage - 1);
  ValueVector cur = apply_F(g, prev);
  return permissive_edges(g, prev, cur);
}

PrunedGame prune_plus_infinity(const GameGraph& g) {
  auto in = min_attractor(g);
  PrunedGame out;
  out.from_original.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) {
      out.from_original[v] = out.to_original.size();
      out.to_original.push_back(v);
    }
  }
  out.game = g.induced(out.to_original);
  return out;
}

}  // namespace spg
