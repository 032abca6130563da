#include "spg/rand_strategies.hpp"

#include <algorithm>
#include <set>

namespace spg {

std::vector<VertexId> RandStrategy::support(VertexId v) const {
  std::vector<VertexId> out;
  for (const Outcome& o : dist_.at(v)) {
    if (o.prob > 0) out.push_back(o.succ);
  }
  return out;
}

bool RandStrategy::in_support(VertexId v, VertexId succ) const {
  const auto& d = dist_.at(v);
  return std::any_of(d.begin(), d.end(),
                     [&](const Outcome& o) { return o.succ == succ && o.prob > 0; });
}

Rational RandStrategy::prob(VertexId v, VertexId succ) const {
  for (const Outcome& o : dist_.at(v)) {
    if (o.succ == succ) return o.prob;
  }
  return 0;
}

RandStrategy dirac(const GameGraph& g, const PureStrategy& s) {
  RandStrategy rho(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.is_min(v)) rho.set(v, {Outcome{s(v), 1}});
  }
  return rho;
}

void validate(const GameGraph& g, const RandStrategy& rho) {
  if (rho.size() != g.num_vertices()) {
    throw DomainError("strategy size does not match the game");
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& d = rho.at(v);
    if (!g.is_min(v)) {
      if (!d.empty()) throw DomainError("distribution given at non-Min vertex '" + g.name(v) + "'");
      continue;
    }
    if (d.empty()) throw DomainError("no distribution at '" + g.name(v) + "'");
    Rational total = 0;
    std::set<VertexId> seen;
    for (const Outcome& o : d) {
      if (!g.has_edge(v, o.succ)) {
        throw DomainError("distribution at '" + g.name(v) + "' uses a non-edge");
      }
      if (!seen.insert(o.succ).second) {
        throw DomainError("successor listed twice at '" + g.name(v) + "'");
      }
      if (o.prob <= 0) throw DomainError("non-positive probability at '" + g.name(v) + "'");
      total += o.prob;
    }
    if (total != 1) {
      throw DomainError("probabilities at '" + g.name(v) + "' sum to " + to_fraction_string(total));
    }
  }
}

RandStrategy build_rho_p(const GameGraph& g, const PureStrategy& sigma1,
                         const PureStrategy& sigma2, const Rational& p) {
  if (p <= 0 || p >= 1) throw DomainError("p must lie strictly between 0 and 1");
  const auto comps = sccs(g);
  std::vector<bool> negative(g.num_vertices(), false);
  for (const auto& comp : comps) {
    if (comp.size() == 1 && !g.has_edge(comp[0], comp[0])) continue;
    if (scc_has_negative_cycle(g, comp)) {
      for (VertexId v : comp) negative[v] = true;
    }
  }
  RandStrategy rho(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_min(v)) continue;
    VertexId s1 = sigma1(v);
    if (!negative[v] || sigma2(v) == s1) {
      rho.set(v, {Outcome{s1, 1}});
    } else {
      rho.set(v, {Outcome{s1, p}, Outcome{sigma2(v), Rational(1 - p)}});
    }
  }
  return rho;
}

ProbabilityBound probability_bound(const GraphParams& params, std::size_t nvertices,
                                   Weight dval_sigma_v0, const Rational& epsilon) {
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
  if (params.neg_cycle_gap < 1) throw DomainError("w- must be at least 1");

  const BigInt c = static_cast<unsigned long>(params.cycle_length);
  const BigInt wminus = static_cast<long>(params.neg_cycle_gap);
  const BigInt wplus = static_cast<long>(params.nonneg_cycle_max);
  const BigInt nv = static_cast<unsigned long>(nvertices);
  const BigInt W = static_cast<long>(params.max_abs_weight);
  BigInt absd = static_cast<long>(dval_sigma_v0);
  absd = abs(absd);

  ProbabilityBound pb;
  pb.epsilon = epsilon;
  pb.dval_sigma_v0 = dval_sigma_v0;
  pb.a = ceil(Rational(c * (wminus + wplus), wminus));
  pb.b = Rational(absd + nv * W + wminus, wminus) * c + nv;
  pb.b.canonicalize();

  const unsigned long a = pb.a.get_ui();
  const unsigned long b = pb.b_ceil().get_ui();

  Rational best = 1 - Rational(1, pow2(a + 1));
  BigInt denom2 = 2 * (nv * W * pow2(b + a + 1) + wplus * pow2(b + a + 2));
  if (denom2 != 0) {
    Rational t = 1 - epsilon / Rational(denom2);
    if (t > best) best = t;
  }
  if (dval_sigma_v0 < 0) {
    Rational t = 1 - epsilon / Rational(pow2(a + b + 2) * absd);
    if (t > best) best = t;
  }
  best.canonicalize();
  pb.p_min = best;
  return pb;
}

Synthesis synthesize_epsilon_optimal(const GameGraph& g, const ValueVector& vals,
                                     const BigInt& n, const Rational& epsilon,
                                     const SynthesisOptions& opts) {
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (vals[v].is_plus_inf()) throw DomainError("vertex '" + g.name(v) + "' has value +inf");
  }
  Synthesis out;
  out.switching = switching_strategy(g, vals, n);
  out.params = graph_params(g, opts.exact_params, opts.exact_params_cap);
  const auto dvals = eval_deterministic_all(g, out.switching, opts.alpha_cap);

  std::vector<VertexId> candidates;
  if (opts.v0) {
    candidates.push_back(*opts.v0);
  } else {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (!g.is_target(v)) candidates.push_back(v);
    }
    if (candidates.empty() && g.num_vertices() > 0) candidates.push_back(0);
  }
  if (candidates.empty()) throw DomainError("empty game");

  bool first = true;
  for (VertexId v : candidates) {
    if (!dvals.at(v).is_finite()) {
      throw std::logic_error("switching strategy has infinite value at '" + g.name(v) + "'");
    }
    ProbabilityBound pb =
        probability_bound(out.params, g.num_vertices(), dvals[v].value(), epsilon);
    if (first || pb.p_min > out.bound.p_min) {
      out.bound = pb;
      out.v0 = v;
      first = false;
    }
  }
  out.rho = build_rho_p(g, out.switching.sigma1, out.switching.sigma2, out.bound.p_min);
  return out;
}

std::vector<VertexId> largest_trap(const GameGraph& g, const RandStrategy& rho) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> in(n);
  for (VertexId v = 0; v < n; ++v) in[v] = !g.is_target(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (!in[v]) continue;
      bool stays;
      if (g.is_max(v)) {
        auto succ = g.successors(v);
        stays = std::any_of(succ.begin(), succ.end(), [&](const Arc& a) { return in[a.dst]; });
      } else {
        auto supp = rho.support(v);
        stays = std::all_of(supp.begin(), supp.end(), [&](VertexId s) { return in[s]; });
      }
      if (!stays) {
        in[v] = false;
        changed = true;
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

bool check_almost_sure_reach(const GameGraph& g, const RandStrategy& rho) {
  validate(g, rho);
  return largest_trap(g, rho).empty();
}

}  // namespace spg
