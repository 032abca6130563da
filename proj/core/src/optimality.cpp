#include "spg/optimality.hpp"

#include "spg/det_strategies.hpp"

namespace spg {

std::string_view to_string(OptimalityReason r) {
  switch (r) {
    case OptimalityReason::Ok: return "ok";
    case OptimalityReason::EarlyStationarityFailed: return "early-stationarity-failed";
    case OptimalityReason::AttractorFailed: return "attractor-failed";
  }
  return "?";
}

namespace {

ValueVector lift(const PrunedGame& pg, const ValueVector& x, std::size_t n) {
  ValueVector out;
  out.iteration = x.iteration;
  out.values.assign(n, ExtValue::plus_inf());
  for (VertexId i = 0; i < pg.to_original.size(); ++i) out.values[pg.to_original[i]] = x.values[i];
  return out;
}

}  // namespace

OptimalityReport check_optimal_memoryless(const GameGraph& g) {
  const ValueVector vals = solve_values(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (vals[v].is_minus_inf()) {
      throw DomainError("vertex '" + g.name(v) + "' has value -inf");
    }
  }

  const std::size_t n = g.num_vertices();
  PrunedGame pg = prune_plus_infinity(g);
  const GameGraph& h = pg.game;
  const std::size_t k = h.num_vertices();

  OptimalityReport r;
  PureStrategy local(k);
  if (k == 0) {
    r.f_prev = r.f_last = lift(pg, ValueVector{}, n);
  } else {
    ValueVector prev = iterate_F(h, k - 1);
    ValueVector last = apply_F(h, prev);
    r.applications = k;
    r.f_prev = lift(pg, prev, n);
    r.f_last = lift(pg, last, n);
    if (prev.values != last.values) {
      r.reason = OptimalityReason::EarlyStationarityFailed;
      return r;
    }
    AttractorResult attr = attractor(h, permissive_edges(h, prev, last));
    if (!attr.covers_all()) {
      r.reason = OptimalityReason::AttractorFailed;
      return r;
    }
    local = attr.strategy;
  }

  PureStrategy s(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!g.is_min(v)) continue;
    if (pg.from_original[v]) {
      s.set(v, pg.to_original[local(*pg.from_original[v])]);
    } else {
      s.set(v, g.successors(v).front().dst);
    }
  }
  r.exists = true;
  r.reason = OptimalityReason::Ok;
  r.optimal_strategy = std::move(s);
  return r;
}

PureStrategy extract_optimal(const GameGraph&, const OptimalityReport& report) {
  if (!report.exists || !report.optimal_strategy) {
    throw DomainError("no optimal memoryless strategy exists");
  }
  return *report.optimal_strategy;
}

}  // namespace spg
