#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spg/det_strategies.hpp"
#include "spg/game_io.hpp"
#include "spg/graph_analysis.hpp"
#include "spg/json_io.hpp"
#include "spg/markov.hpp"
#include "spg/optimality.hpp"
#include "spg/rand_strategies.hpp"
#include "spg/rand_to_det.hpp"
#include "spg/simulate.hpp"
#include "spg/values.hpp"
#include "spg/verify/corpus.hpp"

namespace spg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

bool exact_params_from_env() {
  const char* v = std::getenv("SPG_EXACT_PARAMS");
  return v != nullptr && std::string(v) == "1";
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

VertexId vertex(const GameGraph& g, const std::string& name) {
  auto v = g.find(name);
  if (!v) throw UsageError("unknown vertex '" + name + "'");
  return *v;
}

ValueVector values_without_plus_inf(const GameGraph& g) {
  ValueVector vals = solve_values(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (vals[v].is_plus_inf()) {
      throw DomainError("vertex '" + g.name(v) +
                        "' has value +inf (Min cannot force the target); remove it first");
    }
  }
  return vals;
}

BigInt parse_natural(const std::string& s) {
  BigInt n;
  if (s.empty() || n.set_str(s, 10) != 0 || n < 0) {
    throw UsageError("expected a non-negative integer, got '" + s + "'");
  }
  return n;
}

RandStrategy rand_from_file(const GameGraph& g, const std::string& path) {
  Json j = read_json(path);
  return rand_strategy_from_json(g, j.contains("rho") ? j.at("rho") : j);
}

Json validate_cmd(const GameGraph& g) {
  Json comps = Json::array();
  for (const auto& c : sccs(g)) {
    Json names = Json::array();
    for (VertexId v : c) names.push_back(g.name(v));
    comps.push_back(names);
  }
  return Json{{"valid", true},
              {"vertices", g.num_vertices()},
              {"edges", g.num_edges()},
              {"W", g.max_abs_weight()},
              {"sccs", comps}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest-path game solver and strategy synthesis", "spg"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string game_path, strategy_path, tau_path, v0_name, epsilon_text, n_text, from = "rand";
  std::uint64_t seed = 1;
  std::size_t episodes = 10'000, step_cap = 100'000, count = 200, alpha_cap = kDefaultAlphaCap;

  auto add_game = [&](CLI::App* sub) {
    sub->add_option("game", game_path, "Game file (text or JSON)")->required();
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate a game");
  add_game(validate);
  auto* values = app.add_subcommand("values", "Deterministic game values");
  add_game(values);
  auto* synth_det = app.add_subcommand("synthesize-det", "Switching strategy for a threshold n");
  add_game(synth_det);
  synth_det->add_option("--n", n_text, "Threshold parameter")->default_val("0");
  auto* synth_rand =
      app.add_subcommand("synthesize-rand", "Epsilon-optimal randomised memoryless strategy");
  add_game(synth_rand);
  synth_rand->add_option("--epsilon", epsilon_text, "Rational, e.g. 1/10")->required();
  synth_rand->add_option("--n", n_text, "Threshold parameter (default: -value of v0, or 0)");
  synth_rand->add_option("--v0", v0_name, "Initial vertex for the probability bound");
  auto* eval_det = app.add_subcommand("evaluate-det", "Worst-case value of a deterministic strategy");
  add_game(eval_det);
  eval_det->add_option("--strategy", strategy_path, "Strategy JSON")->required();
  eval_det->add_option("--alpha-cap", alpha_cap, "Largest alpha unrolled");
  auto* eval_rand = app.add_subcommand("evaluate-rand", "Exact value of a randomised strategy");
  add_game(eval_rand);
  eval_rand->add_option("--strategy", strategy_path, "Strategy JSON")->required();
  auto* conv = app.add_subcommand("convert", "Randomised to deterministic switching strategy");
  add_game(conv);
  conv->add_option("--from", from, "Source strategy kind")->check(CLI::IsMember({"rand"}));
  conv->add_option("--strategy", strategy_path, "Strategy JSON")->required();
  conv->add_option("--v0", v0_name, "Initial vertex")->required();
  auto* check = app.add_subcommand("check-optimal", "Does Min have an optimal memoryless strategy?");
  add_game(check);
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo estimate of a strategy's value");
  add_game(sim);
  sim->add_option("--strategy", strategy_path, "Min strategy JSON")->required();
  sim->add_option("--tau", tau_path, "Max strategy JSON (default: best response)");
  sim->add_option("--v0", v0_name, "Initial vertex")->required();
  sim->add_option("--seed", seed, "PRNG seed");
  sim->add_option("--episodes", episodes, "Number of episodes");
  sim->add_option("--step-cap", step_cap, "Steps before an episode is truncated");
  auto* corpus = app.add_subcommand("corpus-check", "Property suite on a random corpus");
  corpus->add_option("--seed", seed, "Corpus seed")->default_val(2024);
  corpus->add_option("--count", count, "Number of games")->default_val(200);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  int status = 0;
  try {
    Json report;
    if (*corpus) {
      verify::CorpusOptions opts;
      opts.seed = seed;
      opts.count = count;
      auto summary = verify::run_corpus(opts);
      report = verify::summary_to_json(summary);
      if (!summary.pass()) status = 1;
    } else {
      const GameGraph g = load_game(game_path);
      if (*validate) {
        report = validate_cmd(g);
      } else if (*values) {
        report = values_to_json(g, solve_values(g));
      } else if (*synth_det) {
        ValueVector vals = values_without_plus_inf(g);
        report = switching_to_json(g, switching_strategy(g, vals, parse_natural(n_text)));
      } else if (*synth_rand) {
        ValueVector vals = values_without_plus_inf(g);
        SynthesisOptions opts;
        opts.exact_params = exact_params_from_env();
        if (!v0_name.empty()) opts.v0 = vertex(g, v0_name);
        BigInt n = 0;
        if (!n_text.empty()) {
          n = parse_natural(n_text);
        } else if (opts.v0 && vals[*opts.v0].is_finite() && vals[*opts.v0].value() < 0) {
          n = static_cast<long>(-vals[*opts.v0].value());
        }
        Rational eps;
        try {
          eps = parse_rational(epsilon_text);
        } catch (const ParseError& e) {
          throw UsageError(e.what());
        }
        Synthesis syn = synthesize_epsilon_optimal(g, vals, n, eps, opts);
        report = Json{{"rho", rand_strategy_to_json(g, syn.rho)},
                      {"bound", bound_to_json(syn.bound)},
                      {"v0", g.name(syn.v0)},
                      {"n", n.get_str()},
                      {"params", params_to_json(syn.params)},
                      {"switching", switching_to_json(g, syn.switching)}};
      } else if (*eval_det) {
        Json j = read_json(strategy_path);
        std::vector<ExtValue> res;
        if (j.contains("sigma1")) {
          res = eval_deterministic_all(g, switching_from_json(g, j), alpha_cap);
        } else if (j.contains("optimal_strategy")) {
          res = eval_deterministic_all(g, pure_strategy_from_json(g, j.at("optimal_strategy")));
        } else {
          res = eval_deterministic_all(g, pure_strategy_from_json(g, j.contains("sigma") ? j.at("sigma") : j));
        }
        Json vals = Json::object();
        for (VertexId v = 0; v < g.num_vertices(); ++v) vals[g.name(v)] = to_json(res[v]);
        report = Json{{"values", vals}};
      } else if (*eval_rand) {
        RandStrategy rho = rand_from_file(g, strategy_path);
        BestResponse br = max_best_response(g, rho);
        report = Json{{"values", expectations_to_json(g, br.values)},
                      {"tau", strategy_to_json(g, br.tau)},
                      {"rounds", br.rounds}};
      } else if (*conv) {
        RandStrategy rho = rand_from_file(g, strategy_path);
        VertexId v0 = vertex(g, v0_name);
        BestResponse br = max_best_response(g, rho);
        report = switching_to_json(g, convert(g, rho, br.values, v0));
        report["mval_v0"] = to_fraction_string(*br.values[v0]);
      } else if (*check) {
        report = optimality_to_json(g, check_optimal_memoryless(g));
      } else if (*sim) {
        RandStrategy rho = rand_from_file(g, strategy_path);
        VertexId v0 = vertex(g, v0_name);
        MaxPureStrategy tau;
        std::optional<Rational> exact;
        if (tau_path.empty()) {
          BestResponse br = max_best_response(g, rho);
          tau = br.tau;
          exact = br.values[v0];
        } else {
          Json j = read_json(tau_path);
          tau = max_strategy_from_json(g, j.contains("tau") ? j.at("tau") : j);
        }
        MarkovChain mc = build_mc(g, rho, tau);
        if (!exact) exact = solve_expectations(mc)[v0];
        SimConfig cfg{seed, episodes, step_cap};
        report = sim_report_to_json(simulate(mc, v0, cfg));
        report["seed"] = seed;
        report["tau"] = strategy_to_json(g, tau);
        report["exact"] = exact ? Json(to_fraction_string(*exact)) : Json("+inf");
      }
    }
    if (format == "text") {
      render_text(report, "", out);
    } else {
      out << report.dump(2) << '\n';
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    err << "invalid game: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace spg::cli
