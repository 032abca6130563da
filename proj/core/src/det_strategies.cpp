#include "spg/det_strategies.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "spg/graph_analysis.hpp"

namespace spg {

bool AttractorResult::covers_all() const {
  return std::all_of(distance.begin(), distance.end(), [](const auto& d) { return d.has_value(); });
}

AttractorResult attractor(const GameGraph& g, const EdgeFilter& keep) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<VertexId>> preds(n);
  std::vector<std::size_t> pending(n, 0);
  for (const Edge& e : g.edges()) {
    if (!keep(e.src, e.dst)) continue;
    preds[e.dst].push_back(e.src);
    ++pending[e.src];
  }

  AttractorResult r;
  r.distance.assign(n, std::nullopt);
  r.strategy = PureStrategy(n);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (g.is_target(v)) {
      r.distance[v] = 0;
      queue.push_back(v);
    }
  }
  // BFS order pops vertices by non-decreasing distance, so a Max vertex
  // enters when its farthest successor is popped.
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId p : preds[u]) {
      if (r.distance[p]) continue;
      if (g.is_min(p) || --pending[p] == 0) {
        r.distance[p] = *r.distance[u] + 1;
        queue.push_back(p);
      }
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    if (!g.is_min(v) || !r.distance[v]) continue;
    for (const Arc& a : g.successors(v)) {
      if (!keep(v, a.dst) || !r.distance[a.dst]) continue;
      if (*r.distance[a.dst] + 1 != *r.distance[v]) continue;
      if (!r.strategy.at(v) || a.dst < *r.strategy.at(v)) r.strategy.set(v, a.dst);
    }
  }
  return r;
}

AttractorResult attractor(const GameGraph& g, const std::optional<PermissiveEdges>& restricted_to) {
  if (!restricted_to) {
    return attractor(g, [](VertexId, VertexId) { return true; });
  }
  const auto& allowed = restricted_to->allowed;
  return attractor(g, [&](VertexId u, VertexId v) {
    if (!g.is_min(u)) return true;
    if (u >= allowed.size()) return false;
    return std::find(allowed[u].begin(), allowed[u].end(), v) != allowed[u].end();
  });
}

namespace {

// Energy game on the -inf region: Min keeps the credit finite under weights
// -(|V|w + 1), i.e. every conforming cycle has negative original weight.
void energy_strategy(const GameGraph& g, const std::vector<bool>& region, PureStrategy& out) {
  const std::size_t n = g.num_vertices();
  const Weight scale = static_cast<Weight>(n);
  auto energy = [&](Weight w) { return -(scale * w + 1); };

  Weight bound = 0;
  for (const Edge& e : g.edges()) {
    if (region[e.src] && region[e.dst]) bound = std::max(bound, -energy(e.weight));
  }
  bound *= scale;
  constexpr Weight kTop = std::numeric_limits<Weight>::max();

  // need(v') - u, floored at 0; kTop absorbs.
  auto lift = [&](Weight need, Weight u) -> Weight {
    if (need == kTop) return kTop;
    Weight x = std::max<Weight>(0, need - u);
    return x > bound ? kTop : x;
  };

  std::vector<Weight> need(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (!region[v] || need[v] == kTop) continue;
      const bool energy_player = g.is_min(v);
      Weight best = energy_player ? kTop : 0;
      for (const Arc& a : g.successors(v)) {
        if (!region[a.dst]) continue;
        Weight x = lift(need[a.dst], energy(a.weight));
        best = energy_player ? std::min(best, x) : std::max(best, x);
      }
      if (best > need[v]) {
        need[v] = best;
        changed = true;
      }
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    if (!region[v]) continue;
    if (need[v] == kTop) throw std::logic_error("-inf vertex loses the energy game");
    if (!g.is_min(v)) continue;
    std::optional<VertexId> pick;
    Weight best = kTop;
    for (const Arc& a : g.successors(v)) {
      if (!region[a.dst]) continue;
      Weight x = lift(need[a.dst], energy(a.weight));
      if (x < best || (x == best && pick && a.dst < *pick)) {
        best = x;
        pick = a.dst;
      }
    }
    out.set(v, *pick);
  }
}

}  // namespace

PureStrategy fake_optimal_nc_strategy(const GameGraph& g, const ValueVector& vals) {
  const std::size_t n = g.num_vertices();
  if (vals.size() != n) throw DomainError("value vector does not match the game");
  std::vector<bool> minus_region(n, false);
  bool any_finite = false;
  for (VertexId v = 0; v < n; ++v) {
    if (vals[v].is_plus_inf()) {
      throw DomainError("vertex '" + g.name(v) + "' has value +inf");
    }
    if (vals[v].is_minus_inf()) minus_region[v] = true;
    if (vals[v].is_finite() && !g.is_target(v)) any_finite = true;
  }

  // Tight edges: w + dValue(v') = dValue(v) between finite vertices.
  auto tight = [&](VertexId u, VertexId v) {
    if (!vals[u].is_finite() || !vals[v].is_finite()) return false;
    return vals[v].plus(*g.weight(u, v)) == vals[u];
  };
  AttractorResult tight_attr = attractor(g, tight);

  PureStrategy s(n);
  if (any_finite) {
    for (VertexId v = 0; v < n; ++v) {
      if (!g.is_min(v) || !vals[v].is_finite()) continue;
      if (!tight_attr.strategy.at(v)) {
        throw std::logic_error("finite vertex '" + g.name(v) + "' outside the tight attractor");
      }
      s.set(v, *tight_attr.strategy.at(v));
    }
  }
  if (std::find(minus_region.begin(), minus_region.end(), true) != minus_region.end()) {
    energy_strategy(g, minus_region, s);
  }
  return s;
}

namespace {

std::vector<Edge> restricted_edges(const GameGraph& g, const PureStrategy& s) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (g.is_min(e.src) && (!s.at(e.src) || *s.at(e.src) != e.dst)) continue;
    out.push_back(e);
  }
  return out;
}

}  // namespace

bool verify_nc(const GameGraph& g, const PureStrategy& s) {
  // Elementary cycles have at most |V| edges, so a cycle of weight >= 0 is
  // exactly one whose reweighted sum -(|V|w + 1) summed is negative.
  const Weight scale = static_cast<Weight>(g.num_vertices());
  std::vector<Edge> edges = restricted_edges(g, s);
  for (Edge& e : edges) e.weight = -(scale * e.weight + 1);
  return !has_negative_cycle(g.num_vertices(), edges);
}

std::vector<ExtValue> fake_values(const GameGraph& g, const PureStrategy& s) {
  const std::size_t n = g.num_vertices();
  std::vector<ExtValue> best(n, ExtValue::minus_inf());
  for (VertexId v = 0; v < n; ++v) {
    if (g.is_target(v)) best[v] = ExtValue::finite(0);
  }
  std::vector<Edge> edges = restricted_edges(g, s);
  // No conforming cycle is non-negative, so longest simple paths suffice.
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (const Edge& e : edges) {
      ExtValue cand = best[e.dst].plus(e.weight);
      if (cand > best[e.src]) {
        best[e.src] = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return best;
}

mpz_class switching_alpha(const GameGraph& g, const mpz_class& n) {
  const std::size_t nv = g.num_vertices();
  mpz_class w = static_cast<long>(g.max_abs_weight());
  mpz_class v = static_cast<unsigned long>(nv);
  mpz_class vm1 = nv == 0 ? mpz_class(0) : mpz_class(static_cast<unsigned long>(nv - 1));
  return (2 * w * vm1 + n) * v + 1;
}

SwitchingStrategy switching_strategy(const GameGraph& g, const ValueVector& vals,
                                     const mpz_class& n) {
  if (n < 0) throw DomainError("switching parameter n must be non-negative");
  SwitchingStrategy s;
  s.sigma1 = fake_optimal_nc_strategy(g, vals);
  s.sigma2 = attractor(g).strategy;
  s.alpha = switching_alpha(g, n);
  return s;
}

std::vector<ExtValue> eval_deterministic_all(const GameGraph& g, const PureStrategy& s) {
  const std::size_t n = g.num_vertices();
  AttractorResult attr = attractor(g, [&](VertexId u, VertexId v) {
    return !g.is_min(u) || (s.at(u) && *s.at(u) == v);
  });
  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v) {
    if (attr.distance[v]) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return *attr.distance[a] < *attr.distance[b]; });

  std::vector<ExtValue> val(n, ExtValue::plus_inf());
  for (VertexId v : order) {
    if (g.is_target(v)) {
      val[v] = ExtValue::finite(0);
    } else if (g.is_min(v)) {
      val[v] = val[s(v)].plus(*g.weight(v, s(v)));
    } else {
      ExtValue best = ExtValue::minus_inf();
      for (const Arc& a : g.successors(v)) best = std::max(best, val[a.dst].plus(a.weight));
      val[v] = best;
    }
  }
  return val;
}

ExtValue eval_deterministic(const GameGraph& g, const PureStrategy& s, VertexId v0) {
  return eval_deterministic_all(g, s).at(v0);
}

std::vector<ExtValue> eval_deterministic_all(const GameGraph& g, const SwitchingStrategy& s,
                                             std::size_t cap) {
  if (s.alpha < 0) throw DomainError("negative switching parameter");
  if (s.alpha > mpz_class(static_cast<unsigned long>(cap))) {
    throw CapExceeded("alpha = " + s.alpha.get_str() + " exceeds the evaluation cap " +
                      std::to_string(cap));
  }
  const std::size_t n = g.num_vertices();
  const std::size_t alpha = s.alpha.get_ui();

  // Layer alpha: sigma2 forever. Layer k < alpha: sigma1 now, layer k+1 next.
  std::vector<ExtValue> next = eval_deterministic_all(g, s.sigma2);
  std::vector<ExtValue> cur(n);
  for (std::size_t k = alpha; k-- > 0;) {
    for (VertexId v = 0; v < n; ++v) {
      if (g.is_target(v)) {
        cur[v] = ExtValue::finite(0);
      } else if (g.is_min(v)) {
        VertexId c = s.sigma1(v);
        cur[v] = next[c].plus(*g.weight(v, c));
      } else {
        ExtValue best = ExtValue::minus_inf();
        for (const Arc& a : g.successors(v)) best = std::max(best, next[a.dst].plus(a.weight));
        cur[v] = best;
      }
    }
    std::swap(cur, next);
  }
  return next;
}

ExtValue eval_deterministic(const GameGraph& g, const SwitchingStrategy& s, VertexId v0,
                            std::size_t cap) {
  return eval_deterministic_all(g, s, cap).at(v0);
}

}  // namespace spg
