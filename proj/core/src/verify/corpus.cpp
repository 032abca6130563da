#include "spg/verify/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "spg/det_strategies.hpp"
#include "spg/game_io.hpp"
#include "spg/graph_analysis.hpp"
#include "spg/optimality.hpp"
#include "spg/rand_strategies.hpp"
#include "spg/rand_to_det.hpp"
#include "spg/values.hpp"
#include "spg/verify/oracles.hpp"

namespace spg::verify {

GameGraph random_game(std::mt19937_64& rng, const GeneratorConfig& cfg) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = uniform(cfg.min_vertices, cfg.max_vertices);
  const auto W = static_cast<Weight>(uniform(1, static_cast<std::size_t>(cfg.max_weight)));
  const std::size_t targets = n >= 4 ? uniform(1, 2) : 1;

  GameBuilder b;
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < targets) {
      ids.push_back(b.target("t" + std::to_string(i)));
    } else if (uniform(0, 1) == 0) {
      ids.push_back(b.min("m" + std::to_string(i)));
    } else {
      ids.push_back(b.max("x" + std::to_string(i)));
    }
  }
  std::uniform_int_distribution<Weight> weight(-W, W);
  for (std::size_t i = targets; i < n; ++i) {
    std::vector<VertexId> succ(ids);
    std::shuffle(succ.begin(), succ.end(), rng);
    const std::size_t deg = uniform(1, std::min(cfg.max_out_degree, n));
    succ.resize(deg);
    // Half of the vertices get a direct exit so that finite values are common.
    if (uniform(0, 1) == 0 && std::find(succ.begin(), succ.end(), ids[0]) == succ.end()) {
      succ.back() = ids[0];
    }
    std::sort(succ.begin(), succ.end());
    for (VertexId s : succ) b.edge(ids[i], s, weight(rng));
  }
  return b.build();
}

std::vector<GameGraph> corpus(std::uint64_t seed, std::size_t count, const GeneratorConfig& cfg) {
  std::vector<GameGraph> out;
  std::mt19937_64 master(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(master());
    out.push_back(random_game(rng, cfg));
  }
  return out;
}

bool CorpusSummary::pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const auto& kv) { return kv.second.pass(); });
}

void CorpusSummary::record(const std::string& name, bool ok, const std::string& detail) {
  PropertyResult& r = properties[name];
  ++r.checked;
  if (!ok) {
    if (r.failed == 0) r.first_failure = detail;
    ++r.failed;
  }
}

namespace {

std::string show(const ExtValue& x) { return x.to_string(); }

bool at_most(const ExtValue& a, const Rational& b) {
  if (a.is_minus_inf()) return true;
  if (a.is_plus_inf()) return false;
  return Rational(a.value()) <= b;
}

void check_values(const GameGraph& g, const ValueVector& vals, CorpusSummary& s,
                  const std::string& label) {
  const std::size_t n = g.num_vertices();
  auto oracle = oracle_values(g);
  bool same = oracle == vals.values;
  std::string detail;
  if (!same) {
    std::ostringstream os;
    os << label << ":";
    for (VertexId v = 0; v < n; ++v) os << ' ' << show(vals[v]) << '/' << show(oracle[v]);
    detail = os.str();
  }
  s.record(prop::kValuesOracle, same, detail);

  const Weight lim = static_cast<Weight>(n - 1) * g.max_abs_weight();
  bool bounded = std::all_of(vals.values.begin(), vals.values.end(), [&](const ExtValue& x) {
    return !x.is_finite() || (x.value() >= -lim && x.value() <= lim);
  });
  s.record(prop::kValuesBound, bounded, label);

  ValueVector x = initial_values(g);
  bool monotone = true;
  const std::size_t horizon = minus_infinity_horizon(g);
  for (std::size_t i = 0; i < horizon; ++i) {
    ValueVector y = apply_F(g, x);
    for (VertexId v = 0; v < n; ++v) {
      if (y[v] > x[v]) monotone = false;
    }
    if (y.values == x.values) break;
    x = std::move(y);
  }
  s.record(prop::kMonotone, monotone, label);

  ValueVector f = apply_F(g, vals);
  bool fix = true;
  for (VertexId v = 0; v < n; ++v) {
    if (vals[v].is_finite() && f[v] != vals[v]) fix = false;
  }
  s.record(prop::kFixpoint, fix, label);
}

void check_optimality(const GameGraph& g, const ValueVector& vals, CorpusSummary& s,
                      const std::string& label) {
  for (const ExtValue& x : vals.values) {
    if (x.is_minus_inf()) return;
  }
  OptimalityReport r = check_optimal_memoryless(g);
  auto brute = brute_force_optimal(g, vals.values);
  s.record(prop::kOptimality, r.exists == brute.has_value(),
           label + ": check says " + (r.exists ? "yes" : "no") + ", brute force disagrees");
  if (r.exists) {
    auto eval = eval_deterministic_all(g, extract_optimal(g, r));
    bool ok = eval == vals.values && r.applications == prune_plus_infinity(g).game.num_vertices();
    s.record(prop::kOptimalExtract, ok, label);
  }
}

void check_rand(const GameGraph& h, const ValueVector& hv, const CorpusOptions& opts,
                CorpusSummary& s, const std::string& label) {
  const std::size_t n = h.num_vertices();
  bool first_rho = true;
  for (VertexId v0 = 0; v0 < n; ++v0) {
    if (h.is_target(v0) || !hv[v0].is_finite()) continue;
    const Weight d0 = hv[v0].value();
    const BigInt nparam = d0 < 0 ? BigInt(static_cast<long>(-d0)) : BigInt(0);
    std::optional<Rational> prev_p, prev_eps;
    bool first_eps = true;
    for (const Rational& eps : opts.epsilons) {
      const std::string tag = label + " v0=" + h.name(v0) + " eps=" + to_fraction_string(eps);
      SynthesisOptions so;
      so.v0 = v0;
      Synthesis syn = synthesize_epsilon_optimal(h, hv, nparam, eps, so);
      const RandStrategy& rho = syn.rho;
      const PureStrategy& s1 = syn.switching.sigma1;
      const PureStrategy& s2 = syn.switching.sigma2;

      if (prev_p) {
        bool mono = eps < *prev_eps ? syn.bound.p_min >= *prev_p : syn.bound.p_min <= *prev_p;
        s.record(prop::kBoundMonotone, mono, tag);
      }
      prev_p = syn.bound.p_min;
      prev_eps = eps;

      if (first_rho) {
        first_rho = false;
        auto idx = scc_index(h);
        auto comps = sccs(h);
        bool ok = true;
        for (VertexId v = 0; v < n; ++v) {
          if (!h.is_min(v)) continue;
          auto supp = rho.support(v);
          for (VertexId x : supp) ok = ok && (x == s1(v) || x == s2(v));
          const auto& comp = comps[idx[v]];
          bool cyc = comp.size() > 1 || h.has_edge(v, v);
          if (!(cyc && scc_has_negative_cycle(h, comp))) {
            ok = ok && supp == std::vector<VertexId>{s1(v)};
          }
        }
        s.record(prop::kRhoSupport, ok, tag);
      }

      s.record(prop::kTargetProba1, check_almost_sure_reach(h, rho), tag);
      s.record(prop::kCyclesPositive,
               all_cycles_negative(h, [&](VertexId u, VertexId v) { return !h.is_min(u) || s1(u) == v; }),
               tag);

      BestResponse br = max_best_response(h, rho);
      const MarkovChain mc = build_mc(h, rho, br.tau);
      s.record(prop::kResidual, bellman_residual(mc, br.values) == 0, tag);
      if (first_eps) {
        s.record(prop::kPolicyOracle, enumerate_max_oracle(h, rho) == br.values, tag);
      }
      first_eps = false;

      const Rational& m0 = *br.values[v0];
      s.record(prop::kUpper, m0 <= Rational(d0) + eps,
               tag + ": mval " + to_fraction_string(m0) + " vs value " + std::to_string(d0));
      s.record(prop::kLower, m0 >= Rational(d0),
               tag + ": mval " + to_fraction_string(m0) + " vs value " + std::to_string(d0));

      SwitchingStrategy conv = convert(h, rho, br.values, v0);
      ExtValue conv_val = eval_deterministic(h, conv, v0);
      s.record(prop::kConversion, at_most(conv_val, m0),
               tag + ": det " + show(conv_val) + " vs mval " + to_fraction_string(m0));

      RestrictedGame rg = restricted_game(h, rho, br.values);
      auto keep = [&](VertexId u, VertexId v) { return rg.keeps(u, v); };
      auto longest = longest_bounded_plays(h, keep, n * n);
      bool plays_ok = true;
      for (VertexId v = 0; v < n; ++v) {
        if (!at_most(longest[v], *br.values[v])) plays_ok = false;
      }
      s.record(prop::kNonPositivePlays, plays_ok, tag);

      bool cycles_ok = true;
      for_each_elementary_cycle(h, keep, [&](std::span<const VertexId> c) {
        Weight w = 0;
        for (std::size_t i = 0; i < c.size(); ++i) w += *h.weight(c[i], c[(i + 1) % c.size()]);
        if (w > 0) cycles_ok = false;
      });
      s.record(prop::kNonPositiveCycles, cycles_ok, tag);

      s.record(prop::kConvertedNc,
               all_cycles_negative(h, [&](VertexId u, VertexId v) {
                 return !h.is_min(u) || conv.sigma1(u) == v;
               }),
               tag);
    }
  }
}

void check_det(const GameGraph& h, const ValueVector& hv, CorpusSummary& s,
               const std::string& label) {
  const std::size_t n = h.num_vertices();
  PureStrategy s1 = fake_optimal_nc_strategy(h, hv);
  bool nc = verify_nc(h, s1);
  bool nc_enum =
      all_cycles_negative(h, [&](VertexId u, VertexId v) { return !h.is_min(u) || s1(u) == v; });
  s.record(prop::kNcStrategy, nc && nc_enum, label);

  auto fake = fake_values(h, s1);
  bool fake_ok = true;
  for (VertexId v = 0; v < n; ++v) {
    if (hv[v].is_finite() && fake[v] > hv[v]) fake_ok = false;
  }
  s.record(prop::kFakeValue, fake_ok, label);

  AttractorResult attr = attractor(h);
  bool reach = attr.covers_all();
  for (const auto& d : attr.distance) reach = reach && d && *d <= n;
  auto worst = oracle_eval_pure(h, attr.strategy);
  reach = reach && std::all_of(worst.begin(), worst.end(), [](const ExtValue& x) { return x.is_finite(); });
  s.record(prop::kAttractor, reach, label);

  Weight lowest = 0;
  for (const ExtValue& x : hv.values) {
    if (x.is_finite()) lowest = std::min(lowest, x.value());
  }
  for (Weight k : {Weight{0}, Weight{2}, -lowest}) {
    SwitchingStrategy sw = switching_strategy(h, hv, BigInt(static_cast<long>(k)));
    auto vals = eval_deterministic_all(h, sw);
    bool ok = true;
    for (VertexId v = 0; v < n; ++v) {
      ExtValue bound = std::max(ExtValue::finite(-k), hv[v]);
      if (vals[v] > bound) ok = false;
    }
    s.record(prop::kSwitching, ok, label + " n=" + std::to_string(k));
  }
}

}  // namespace

void check_game(const GameGraph& g, const CorpusOptions& opts, CorpusSummary& summary,
                const std::string& label) {
  try {
    summary.record(prop::kRoundTrip,
                   parse_game(serialize_game(g)) == g && parse_game_json(game_to_json(g)) == g,
                   label);
    if (g.num_vertices() <= 8) {
      GraphParams safe = graph_params(g, false);
      GraphParams exact = graph_params(g, true);
      bool dom = safe.cycle_length >= exact.cycle_length &&
                 safe.neg_cycle_gap <= exact.neg_cycle_gap &&
                 safe.nonneg_cycle_max >= exact.nonneg_cycle_max;
      summary.record(prop::kSafeParams, dom, label);
    }

    const ValueVector vals = solve_values(g);
    check_values(g, vals, summary, label);
    check_optimality(g, vals, summary, label);

    PrunedGame pg = prune_plus_infinity(g);
    const GameGraph& h = pg.game;
    bool any_choice = false;
    for (VertexId v = 0; v < h.num_vertices(); ++v) any_choice = any_choice || !h.is_target(v);
    if (any_choice) {
      const ValueVector hv = solve_values(h);
      check_det(h, hv, summary, label);
      check_rand(h, hv, opts, summary, label);
    }
    summary.record(prop::kCompletes, true, label);
  } catch (const std::exception& e) {
    summary.record(prop::kCompletes, false, label + ": " + e.what());
  }
}

CorpusSummary run_corpus(const CorpusOptions& opts) {
  CorpusSummary s;
  s.seed = opts.seed;
  auto games = corpus(opts.seed, opts.count, opts.generator);
  s.games = games.size();
  for (std::size_t i = 0; i < games.size(); ++i) {
    check_game(games[i], opts, s, "game#" + std::to_string(i));
  }
  return s;
}

Json summary_to_json(const CorpusSummary& s) {
  Json props = Json::object();
  for (const auto& [name, r] : s.properties) {
    Json p{{"checked", r.checked}, {"failed", r.failed}, {"pass", r.pass()}};
    if (!r.pass()) p["first_failure"] = r.first_failure;
    props[name] = p;
  }
  return Json{{"seed", s.seed}, {"games", s.games}, {"pass", s.pass()}, {"properties", props}};
}

std::vector<SampleChain> sample_chains(std::uint64_t seed, std::size_t count,
                                       const GeneratorConfig& cfg) {
  const Rational ps[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3)};
  std::vector<SampleChain> out;
  std::mt19937_64 master(seed);
  for (std::size_t attempt = 0; out.size() < count && attempt < 100 * (count + 1); ++attempt) {
    std::mt19937_64 rng(master());
    GameGraph g = random_game(rng, cfg);
    PrunedGame pg = prune_plus_infinity(g);
    const GameGraph& h = pg.game;
    ValueVector hv = solve_values(h);
    if (!std::any_of(hv.values.begin(), hv.values.end(),
                     [](const ExtValue& x) { return x.is_finite(); })) {
      continue;
    }
    SwitchingStrategy sw = switching_strategy(h, hv, 0);
    const Rational& p = ps[out.size() % 3];
    RandStrategy rho = build_rho_p(h, sw.sigma1, sw.sigma2, p);
    BestResponse br = max_best_response(h, rho);
    MarkovChain mc = build_mc(h, rho, br.tau);

    // First start vertex from which the chain actually branches.
    std::optional<VertexId> v0;
    for (VertexId v = 0; v < h.num_vertices() && !v0; ++v) {
      if (h.is_target(v) || !hv[v].is_finite()) continue;
      std::vector<bool> seen(mc.size(), false);
      std::vector<VertexId> stack{v};
      seen[v] = true;
      while (!stack.empty() && !v0) {
        VertexId u = stack.back();
        stack.pop_back();
        if (mc.transitions[u].size() > 1) v0 = v;
        for (const Transition& t : mc.transitions[u]) {
          if (!seen[t.dst]) {
            seen[t.dst] = true;
            stack.push_back(t.dst);
          }
        }
      }
    }
    if (!v0) continue;
    SampleChain c{h, std::move(mc), *v0, p, *br.values[*v0]};
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace spg::verify
