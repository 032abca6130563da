#include "spg/json_io.hpp"

#include <string>

namespace spg {

namespace {

VertexId lookup(const GameGraph& g, const std::string& name) {
  auto v = g.find(name);
  if (!v) throw ParseError("unknown vertex '" + name + "' in strategy");
  return *v;
}

template <Owner Player>
Json positional_to_json(const GameGraph& g, const PositionalStrategy<Player>& s) {
  Json j = Json::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.owner(v) == Player && v < s.size() && s.at(v)) j[g.name(v)] = g.name(*s.at(v));
  }
  return j;
}

template <Owner Player>
PositionalStrategy<Player> positional_from_json(const GameGraph& g, const Json& j) {
  if (!j.is_object()) throw ParseError("strategy must be a JSON object");
  PositionalStrategy<Player> s(g.num_vertices());
  for (const auto& [name, succ] : j.items()) {
    if (!succ.is_string()) throw ParseError("choice of '" + name + "' must be a vertex name");
    VertexId v = lookup(g, name);
    if (g.owner(v) != Player) {
      throw ParseError("'" + name + "' is not a " + std::string(to_string(Player)) + " vertex");
    }
    s.set(v, lookup(g, succ.template get<std::string>()));
  }
  validate(g, s);
  return s;
}

}  // namespace

Json to_json(const ExtValue& x) {
  if (x.is_finite()) return x.value();
  return x.to_string();
}

Json values_to_json(const GameGraph& g, const ValueVector& vals) {
  Json v = Json::object();
  for (VertexId i = 0; i < g.num_vertices(); ++i) v[g.name(i)] = to_json(vals[i]);
  return Json{{"values", v}, {"iteration", vals.iteration}};
}

Json strategy_to_json(const GameGraph& g, const PureStrategy& s) {
  return positional_to_json(g, s);
}

Json strategy_to_json(const GameGraph& g, const MaxPureStrategy& s) {
  return positional_to_json(g, s);
}

PureStrategy pure_strategy_from_json(const GameGraph& g, const Json& j) {
  return positional_from_json<Owner::Min>(g, j);
}

MaxPureStrategy max_strategy_from_json(const GameGraph& g, const Json& j) {
  return positional_from_json<Owner::Max>(g, j);
}

Json switching_to_json(const GameGraph& g, const SwitchingStrategy& s) {
  return Json{{"sigma1", strategy_to_json(g, s.sigma1)},
              {"sigma2", strategy_to_json(g, s.sigma2)},
              {"alpha", s.alpha.get_str()}};
}

SwitchingStrategy switching_from_json(const GameGraph& g, const Json& j) {
  if (!j.is_object() || !j.contains("sigma1") || !j.contains("sigma2") || !j.contains("alpha")) {
    throw ParseError("switching strategy needs sigma1, sigma2 and alpha");
  }
  SwitchingStrategy s;
  s.sigma1 = pure_strategy_from_json(g, j.at("sigma1"));
  s.sigma2 = pure_strategy_from_json(g, j.at("sigma2"));
  const Json& a = j.at("alpha");
  std::string text = a.is_string() ? a.get<std::string>() : a.dump();
  if (s.alpha.set_str(text, 10) != 0 || s.alpha < 0) {
    throw ParseError("alpha must be a non-negative integer");
  }
  return s;
}

Json rand_strategy_to_json(const GameGraph& g, const RandStrategy& rho) {
  Json j = Json::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_min(v)) continue;
    Json d = Json::object();
    for (const Outcome& o : rho.at(v)) d[g.name(o.succ)] = to_fraction_string(o.prob);
    j[g.name(v)] = d;
  }
  return j;
}

RandStrategy rand_strategy_from_json(const GameGraph& g, const Json& j) {
  if (!j.is_object()) throw ParseError("randomised strategy must be a JSON object");
  RandStrategy rho(g.num_vertices());
  for (const auto& [name, dist] : j.items()) {
    VertexId v = lookup(g, name);
    if (!dist.is_object()) throw ParseError("distribution of '" + name + "' must be an object");
    std::vector<Outcome> out;
    for (const auto& [succ, p] : dist.items()) {
      Rational q = p.is_string() ? parse_rational(p.get<std::string>())
                                 : parse_rational(p.dump());
      out.push_back(Outcome{lookup(g, succ), q});
    }
    rho.set(v, std::move(out));
  }
  validate(g, rho);
  return rho;
}

Json bound_to_json(const ProbabilityBound& pb) {
  return Json{{"a", pb.a.get_str()},
              {"b", to_fraction_string(pb.b)},
              {"b_ceil", pb.b_ceil().get_str()},
              {"p_min", to_fraction_string(pb.p_min)},
              {"epsilon", to_fraction_string(pb.epsilon)},
              {"dval_sigma_v0", pb.dval_sigma_v0}};
}

Json params_to_json(const GraphParams& p) {
  return Json{{"W", p.max_abs_weight},
              {"c", p.cycle_length},
              {"w_minus", p.neg_cycle_gap},
              {"w_plus", p.nonneg_cycle_max},
              {"exact", p.exact}};
}

Json expectations_to_json(const GameGraph& g, const ExpectationVector& e) {
  Json j = Json::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    j[g.name(v)] = e[v] ? Json(to_fraction_string(*e[v])) : Json("+inf");
  }
  return j;
}

Json optimality_to_json(const GameGraph& g, const OptimalityReport& r) {
  Json j{{"exists", r.exists},
         {"reason", std::string(to_string(r.reason))},
         {"optimal_strategy", r.optimal_strategy ? strategy_to_json(g, *r.optimal_strategy)
                                                 : Json(nullptr)},
         {"f_prev", values_to_json(g, r.f_prev)},
         {"f_last", values_to_json(g, r.f_last)},
         {"applications", r.applications}};
  return j;
}

Json sim_report_to_json(const SimReport& r) {
  return Json{{"mean_tp", r.mean_tp},
              {"stderr", r.stderr_tp},
              {"reach_fraction", r.reach_fraction},
              {"truncated", r.truncated},
              {"episodes", r.episodes}};
}

}  // namespace spg
