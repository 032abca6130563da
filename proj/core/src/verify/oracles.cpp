#include "spg/verify/oracles.hpp"

#include <algorithm>

#include "spg/det_strategies.hpp"
#include "spg/graph_analysis.hpp"

namespace spg::verify {

namespace {

template <Owner Player>
void enumerate(const GameGraph& g,
               const std::function<void(const PositionalStrategy<Player>&)>& f, std::size_t cap) {
  std::vector<VertexId> owned;
  std::size_t total = 1;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.owner(v) != Player) continue;
    owned.push_back(v);
    total *= g.successors(v).size();
    if (total > cap) throw CapExceeded("too many positional strategies to enumerate");
  }
  std::vector<std::size_t> idx(owned.size(), 0);
  PositionalStrategy<Player> s(g.num_vertices());
  while (true) {
    for (std::size_t i = 0; i < owned.size(); ++i) {
      s.set(owned[i], g.successors(owned[i])[idx[i]].dst);
    }
    f(s);
    std::size_t i = 0;
    while (i < owned.size() && ++idx[i] == g.successors(owned[i]).size()) idx[i++] = 0;
    if (i == owned.size()) return;
  }
}

bool keeps_max(const MaxPureStrategy& tau, const GameGraph& g, VertexId u, VertexId v) {
  return !g.is_max(u) || tau(u) == v;
}

}  // namespace

void for_each_min_strategy(const GameGraph& g, const std::function<void(const PureStrategy&)>& f,
                           std::size_t cap) {
  enumerate<Owner::Min>(g, f, cap);
}

void for_each_max_strategy(const GameGraph& g,
                           const std::function<void(const MaxPureStrategy&)>& f,
                           std::size_t cap) {
  enumerate<Owner::Max>(g, f, cap);
}

std::vector<ExtValue> one_player_min_values(const GameGraph& g, const MaxPureStrategy& tau) {
  const std::size_t n = g.num_vertices();
  std::vector<ExtValue> d(n, ExtValue::plus_inf());
  for (VertexId v = 0; v < n; ++v) {
    if (g.is_target(v)) d[v] = ExtValue::finite(0);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keeps_max(tau, g, e.src, e.dst)) edges.push_back(e);
  }
  for (std::size_t round = 0; round + 1 < n; ++round) {
    for (const Edge& e : edges) d[e.src] = std::min(d[e.src], d[e.dst].plus(e.weight));
  }
  // Anything still improvable sits behind a pumpable negative cycle.
  for (std::size_t round = 0; round < n; ++round) {
    for (const Edge& e : edges) {
      if (d[e.dst].plus(e.weight) < d[e.src]) d[e.src] = ExtValue::minus_inf();
    }
  }
  return d;
}

std::vector<ExtValue> oracle_values(const GameGraph& g, std::size_t cap) {
  std::vector<ExtValue> best(g.num_vertices(), ExtValue::minus_inf());
  for_each_max_strategy(
      g,
      [&](const MaxPureStrategy& tau) {
        auto d = one_player_min_values(g, tau);
        for (VertexId v = 0; v < d.size(); ++v) best[v] = std::max(best[v], d[v]);
      },
      cap);
  return best;
}

std::vector<ExtValue> oracle_eval_pure(const GameGraph& g, const PureStrategy& s,
                                       std::size_t cap) {
  const std::size_t n = g.num_vertices();
  std::vector<ExtValue> best(n, ExtValue::minus_inf());
  for_each_max_strategy(
      g,
      [&](const MaxPureStrategy& tau) {
        for (VertexId start = 0; start < n; ++start) {
          VertexId v = start;
          Weight tp = 0;
          std::size_t steps = 0;
          while (!g.is_target(v) && steps <= n) {
            VertexId next = g.is_min(v) ? s(v) : tau(v);
            tp += *g.weight(v, next);
            v = next;
            ++steps;
          }
          ExtValue x = g.is_target(v) ? ExtValue::finite(tp) : ExtValue::plus_inf();
          best[start] = std::max(best[start], x);
        }
      },
      cap);
  return best;
}

std::optional<PureStrategy> brute_force_optimal(const GameGraph& g,
                                                const std::vector<ExtValue>& values,
                                                std::size_t cap) {
  std::optional<PureStrategy> found;
  for_each_min_strategy(
      g,
      [&](const PureStrategy& s) {
        if (found) return;
        if (eval_deterministic_all(g, s) == values) found = s;
      },
      cap);
  return found;
}

bool all_cycles_negative(const GameGraph& g,
                         const std::function<bool(VertexId, VertexId)>& keep) {
  bool ok = true;
  for_each_elementary_cycle(g, keep, [&](std::span<const VertexId> cycle) {
    Weight w = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      w += *g.weight(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    if (w >= 0) ok = false;
  });
  return ok;
}

std::vector<ExtValue> longest_bounded_plays(const GameGraph& g,
                                            const std::function<bool(VertexId, VertexId)>& keep,
                                            std::size_t max_len) {
  const std::size_t n = g.num_vertices();
  std::vector<ExtValue> cur(n, ExtValue::minus_inf());
  for (VertexId v = 0; v < n; ++v) {
    if (g.is_target(v)) cur[v] = ExtValue::finite(0);
  }
  for (std::size_t len = 0; len < max_len; ++len) {
    std::vector<ExtValue> next = cur;
    for (const Edge& e : g.edges()) {
      if (!keep(e.src, e.dst)) continue;
      next[e.src] = std::max(next[e.src], cur[e.dst].plus(e.weight));
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace spg::verify
