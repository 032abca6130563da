#include "spg/markov.hpp"

#include <algorithm>
#include <deque>

#include "spg/det_strategies.hpp"

namespace spg {

MarkovChain build_mc(const GameGraph& g, const RandStrategy& rho, const MaxPureStrategy& tau) {
  const std::size_t n = g.num_vertices();
  MarkovChain mc;
  mc.transitions.resize(n);
  mc.target.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    mc.target[v] = g.is_target(v);
    if (g.is_min(v)) {
      for (const Outcome& o : rho.at(v)) {
        if (o.prob > 0) mc.transitions[v].push_back({o.succ, o.prob, *g.weight(v, o.succ)});
      }
    } else if (g.is_max(v)) {
      VertexId c = tau(v);
      auto w = g.weight(v, c);
      if (!w) throw DomainError("Max strategy picks a non-edge at '" + g.name(v) + "'");
      mc.transitions[v].push_back({c, 1, *w});
    }
  }
  return mc;
}

std::vector<bool> almost_sure_reach(const MarkovChain& mc) {
  const std::size_t n = mc.size();
  std::vector<std::vector<VertexId>> preds(n);
  for (VertexId v = 0; v < n; ++v) {
    for (const Transition& t : mc.transitions[v]) {
      if (t.prob > 0) preds[t.dst].push_back(v);
    }
  }
  // can[v]: some path to the target.
  std::vector<bool> can(n, false);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (mc.target[v]) {
      can[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId p : preds[u]) {
      if (!can[p]) {
        can[p] = true;
        queue.push_back(p);
      }
    }
  }
  // In a finite chain, v reaches the target a.s. iff no vertex reachable
  // from v is cut off from it.
  std::vector<bool> sure(n, true);
  for (VertexId v = 0; v < n; ++v) {
    if (can[v]) continue;
    sure[v] = false;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId p : preds[u]) {
      if (sure[p] && !mc.target[p]) {
        sure[p] = false;
        queue.push_back(p);
      }
    }
  }
  return sure;
}

bool ExpectationVector::all_defined() const {
  return std::all_of(values.begin(), values.end(), [](const auto& x) { return x.has_value(); });
}

ExpectationVector solve_expectations(const MarkovChain& mc) {
  const std::size_t n = mc.size();
  for (VertexId v = 0; v < n; ++v) {
    if (mc.target[v]) continue;
    Rational total = 0;
    for (const Transition& t : mc.transitions[v]) total += t.prob;
    if (total != 1) throw DomainError("outgoing probabilities do not sum to 1");
  }

  const auto sure = almost_sure_reach(mc);
  ExpectationVector out;
  out.values.resize(n);

  std::vector<std::size_t> col(n, n);
  std::vector<VertexId> unknowns;
  for (VertexId v = 0; v < n; ++v) {
    if (mc.target[v]) {
      out.values[v] = Rational(0);
    } else if (sure[v]) {
      col[v] = unknowns.size();
      unknowns.push_back(v);
    }
  }
  std::size_t undefined = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!mc.target[v] && !sure[v]) ++undefined;
  }
  if (undefined > 0) {
    out.diagnostic = std::to_string(undefined) +
                     " vertex(es) do not reach the target with probability 1";
  }

  // (I - P) E = r on the unknowns; almost-sure vertices only lead to
  // almost-sure vertices or targets.
  const std::size_t m = unknowns.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    VertexId v = unknowns[i];
    a[i][i] = 1;
    for (const Transition& t : mc.transitions[v]) {
      a[i][m] += t.prob * t.weight;
      if (!mc.target[t.dst]) a[i][col[t.dst]] -= t.prob;
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pivot = k;
    while (pivot < m && a[pivot][k] == 0) ++pivot;
    if (pivot == m) throw std::logic_error("singular Bellman system");
    std::swap(a[k], a[pivot]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= m; ++j) {
        if (a[k][j] != 0) a[i][j] -= f * a[k][j];
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational x = a[i][m] / a[i][i];
    x.canonicalize();
    out.values[unknowns[i]] = x;
  }
  return out;
}

Rational bellman_residual(const MarkovChain& mc, const ExpectationVector& e) {
  Rational worst = 0;
  for (VertexId v = 0; v < mc.size(); ++v) {
    if (!e[v]) continue;
    Rational rhs = 0;
    if (!mc.target[v]) {
      for (const Transition& t : mc.transitions[v]) {
        if (!e[t.dst]) return Rational(-1);
        rhs += t.prob * (t.weight + *e[t.dst]);
      }
    }
    Rational d = abs(Rational(*e[v] - rhs));
    if (d > worst) worst = d;
  }
  return worst;
}

namespace {

bool all_sure(const GameGraph& g, const RandStrategy& rho, const MaxPureStrategy& tau) {
  auto sure = almost_sure_reach(build_mc(g, rho, tau));
  return std::all_of(sure.begin(), sure.end(), [](bool b) { return b; });
}

}  // namespace

BestResponse max_best_response(const GameGraph& g, const RandStrategy& rho,
                               std::vector<ExpectationVector>* trace) {
  if (!check_almost_sure_reach(g, rho)) {
    throw DomainError("the strategy does not reach the target almost surely");
  }
  const std::size_t n = g.num_vertices();

  // Start from the successor closest to the target in the support graph.
  AttractorResult attr = attractor(g, [&](VertexId u, VertexId v) {
    return !g.is_min(u) || rho.in_support(u, v);
  });
  BestResponse br;
  br.tau = MaxPureStrategy(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!g.is_max(v)) continue;
    std::optional<VertexId> pick;
    for (const Arc& a : g.successors(v)) {
      if (!attr.distance[a.dst]) continue;
      if (!pick || *attr.distance[a.dst] < *attr.distance[*pick] ||
          (*attr.distance[a.dst] == *attr.distance[*pick] && a.dst < *pick)) {
        pick = a.dst;
      }
    }
    br.tau.set(v, pick ? *pick : g.successors(v).front().dst);
  }

  while (true) {
    br.values = solve_expectations(build_mc(g, rho, br.tau));
    ++br.rounds;
    if (trace) trace->push_back(br.values);
    if (!br.values.all_defined()) throw std::logic_error("policy lost almost-sure reachability");

    std::vector<std::pair<VertexId, VertexId>> switches;
    for (VertexId v = 0; v < n; ++v) {
      if (!g.is_max(v)) continue;
      const Rational& current = *br.values[v];
      std::optional<VertexId> pick;
      Rational best = current;
      for (const Arc& a : g.successors(v)) {
        Rational cand = a.weight + *br.values[a.dst];
        if (cand > best) {
          best = cand;
          pick = a.dst;
        }
      }
      if (pick) switches.emplace_back(v, *pick);
    }
    if (switches.empty()) break;

    MaxPureStrategy next = br.tau;
    for (auto [v, s] : switches) next.set(v, s);
    if (!all_sure(g, rho, next)) {
      next = br.tau;
      bool any = false;
      for (auto [v, s] : switches) {
        MaxPureStrategy trial = next;
        trial.set(v, s);
        if (all_sure(g, rho, trial)) {
          next = trial;
          any = true;
        }
      }
      if (!any) break;
    }
    br.tau = next;
  }
  return br;
}

ExpectationVector enumerate_max_oracle(const GameGraph& g, const RandStrategy& rho,
                                       std::size_t cap) {
  validate(g, rho);
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> maxv;
  std::size_t total = 1;
  for (VertexId v = 0; v < n; ++v) {
    if (!g.is_max(v)) continue;
    maxv.push_back(v);
    total *= g.successors(v).size();
    if (total > cap) {
      throw CapExceeded("more than " + std::to_string(cap) + " Max strategies to enumerate");
    }
  }

  ExpectationVector best;
  best.values.resize(n);
  std::vector<bool> infinite(n, false);
  std::vector<std::size_t> idx(maxv.size(), 0);
  bool first = true;
  while (true) {
    MaxPureStrategy tau(n);
    for (std::size_t i = 0; i < maxv.size(); ++i) {
      tau.set(maxv[i], g.successors(maxv[i])[idx[i]].dst);
    }
    ExpectationVector e = solve_expectations(build_mc(g, rho, tau));
    for (VertexId v = 0; v < n; ++v) {
      if (!e[v]) {
        infinite[v] = true;
      } else if (first || !best.values[v] || *e[v] > *best.values[v]) {
        best.values[v] = e[v];
      }
    }
    first = false;

    std::size_t i = 0;
    while (i < maxv.size() && ++idx[i] == g.successors(maxv[i]).size()) idx[i++] = 0;
    if (i == maxv.size()) break;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (infinite[v]) best.values[v].reset();
  }
  return best;
}

}  // namespace spg
