#include "spg/graph_analysis.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace spg {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

}  // namespace

std::vector<std::vector<VertexId>> sccs(const GameGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> out;
  std::size_t counter = 0;

  // Iterative Tarjan: each frame remembers the next successor to explore.
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      auto succ = g.successors(f.v);
      if (f.next < succ.size()) {
        VertexId w = succ[f.next++].dst;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

std::vector<std::size_t> scc_index(const GameGraph& g) {
  std::vector<std::size_t> idx(g.num_vertices(), 0);
  auto comps = sccs(g);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (VertexId v : comps[i]) idx[v] = i;
  }
  return idx;
}

bool has_negative_cycle(std::size_t n, std::span<const Edge> edges) {
  // Virtual source at distance 0 to every vertex; a relaxation still
  // possible after n rounds witnesses a negative cycle.
  std::vector<Weight> dist(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (const Edge& e : edges) {
      if (dist[e.src] + e.weight < dist[e.dst]) {
        dist[e.dst] = dist[e.src] + e.weight;
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;
}

bool scc_has_negative_cycle(const GameGraph& g, std::span<const VertexId> scc) {
  std::vector<std::size_t> local(g.num_vertices(), kUnvisited);
  for (std::size_t i = 0; i < scc.size(); ++i) local[scc[i]] = i;
  std::vector<Edge> inner;
  for (const Edge& e : g.edges()) {
    if (local[e.src] != kUnvisited && local[e.dst] != kUnvisited) {
      inner.push_back(Edge{local[e.src], local[e.dst], e.weight});
    }
  }
  return has_negative_cycle(scc.size(), inner);
}

void for_each_elementary_cycle(
    const GameGraph& g, const std::function<bool(VertexId, VertexId)>& keep,
    const std::function<void(std::span<const VertexId>)>& visit) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> on_path(n, false);
  std::vector<VertexId> path;

  // Cycles are enumerated from their smallest vertex `start`, visiting only
  // larger vertices, so each elementary cycle is reported exactly once.
  std::function<void(VertexId, VertexId)> extend = [&](VertexId start, VertexId v) {
    for (const Arc& a : g.successors(v)) {
      if (!keep(v, a.dst)) continue;
      if (a.dst == start) {
        visit(path);
      } else if (a.dst > start && !on_path[a.dst]) {
        on_path[a.dst] = true;
        path.push_back(a.dst);
        extend(start, a.dst);
        path.pop_back();
        on_path[a.dst] = false;
      }
    }
  };

  for (VertexId s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
}

GraphParams graph_params(const GameGraph& g, bool exact, std::size_t cap) {
  GraphParams p;
  const std::size_t n = g.num_vertices();
  p.max_abs_weight = g.max_abs_weight();
  p.exact = exact;
  if (!exact) {
    p.cycle_length = n;
    p.neg_cycle_gap = 1;
    p.nonneg_cycle_max = static_cast<Weight>(n) * p.max_abs_weight;
    return p;
  }
  if (n > cap) {
    throw CapExceeded("exact cycle parameters need |V| <= " + std::to_string(cap) + ", got " +
                      std::to_string(n));
  }

  std::size_t longest = 0;
  std::optional<Weight> max_negative;  // closest to zero
  Weight max_nonneg = 0;
  for_each_elementary_cycle(
      g, [](VertexId, VertexId) { return true; },
      [&](std::span<const VertexId> cycle) {
        longest = std::max(longest, cycle.size());
        Weight w = 0;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          w += *g.weight(cycle[i], cycle[(i + 1) % cycle.size()]);
        }
        if (w < 0) {
          max_negative = max_negative ? std::max(*max_negative, w) : w;
        } else {
          max_nonneg = std::max(max_nonneg, w);
        }
      });
  p.cycle_length = std::max<std::size_t>(longest, 1);
  p.neg_cycle_gap = max_negative ? -*max_negative : 1;
  p.nonneg_cycle_max = max_nonneg;
  return p;
}

}  // namespace spg
