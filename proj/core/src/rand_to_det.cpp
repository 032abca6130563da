#include "spg/rand_to_det.hpp"

#include <algorithm>

namespace spg {

bool RestrictedGame::keeps(VertexId u, VertexId v) const {
  if (!base.is_min(u)) return true;
  const auto& a = allowed.at(u);
  return std::find(a.begin(), a.end(), v) != a.end();
}

RestrictedGame restricted_game(const GameGraph& g, const RandStrategy& rho,
                               const ExpectationVector& mvals) {
  if (!mvals.all_defined()) throw DomainError("expected values are not all defined");
  RestrictedGame rg{g, std::vector<std::vector<VertexId>>(g.num_vertices())};
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_min(v)) continue;
    std::optional<Rational> best;
    for (VertexId s : rho.support(v)) {
      Rational x = *g.weight(v, s) + *mvals[s];
      if (!best || x < *best) {
        best = x;
        rg.allowed[v].assign(1, s);
      } else if (x == *best) {
        rg.allowed[v].push_back(s);
      }
    }
    std::sort(rg.allowed[v].begin(), rg.allowed[v].end());
  }
  return rg;
}

std::vector<std::size_t> support_distances(const GameGraph& g, const RandStrategy& rho) {
  AttractorResult attr = attractor(g, [&](VertexId u, VertexId v) {
    return !g.is_min(u) || rho.in_support(u, v);
  });
  std::vector<std::size_t> d(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!attr.distance[v]) {
      throw DomainError("'" + g.name(v) + "' is not attracted to the target in the support graph");
    }
    d[v] = *attr.distance[v];
  }
  return d;
}

PureStrategy sigma1_from_rho(const RestrictedGame& rg, const std::vector<std::size_t>& d) {
  PureStrategy s(rg.base.num_vertices());
  for (VertexId v = 0; v < rg.base.num_vertices(); ++v) {
    if (!rg.base.is_min(v)) continue;
    const auto& a = rg.allowed[v];
    if (a.empty()) throw DomainError("no allowed successor at '" + rg.base.name(v) + "'");
    VertexId pick = a.front();
    for (VertexId s2 : a) {
      if (d.at(s2) < d.at(pick)) pick = s2;
    }
    s.set(v, pick);
  }
  return s;
}

BigInt conversion_alpha(const GameGraph& g, const Rational& mval_v0) {
  const BigInt nv = static_cast<unsigned long>(g.num_vertices());
  const BigInt W = static_cast<long>(g.max_abs_weight());
  BigInt k = nv * W - floor(mval_v0);
  if (k < 0) k = 0;
  return k * nv + 1;
}

SwitchingStrategy convert(const GameGraph& g, const RandStrategy& rho,
                          const ExpectationVector& mvals, VertexId v0) {
  RestrictedGame rg = restricted_game(g, rho, mvals);
  SwitchingStrategy s;
  s.sigma1 = sigma1_from_rho(rg, support_distances(g, rho));
  s.sigma2 = attractor(g).strategy;
  s.alpha = conversion_alpha(g, *mvals.values.at(v0));
  return s;
}

SwitchingStrategy convert(const GameGraph& g, const RandStrategy& rho, VertexId v0) {
  return convert(g, rho, max_best_response(g, rho).values, v0);
}

}  // namespace spg
