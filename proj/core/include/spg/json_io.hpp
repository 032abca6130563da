#pragma once

#include <nlohmann/json.hpp>

#include "spg/det_strategies.hpp"
#include "spg/game.hpp"
#include "spg/markov.hpp"
#include "spg/optimality.hpp"
#include "spg/rand_strategies.hpp"
#include "spg/simulate.hpp"
#include "spg/values.hpp"

namespace spg {

using Json = nlohmann::ordered_json;

/// Integers stay numbers, infinities become "+inf" / "-inf".
Json to_json(const ExtValue& x);

/// {"values": {name: value}, "iteration": i}
Json values_to_json(const GameGraph& g, const ValueVector& vals);

/// {name: successor-name} over the owner's vertices.
Json strategy_to_json(const GameGraph& g, const PureStrategy& s);
Json strategy_to_json(const GameGraph& g, const MaxPureStrategy& s);
PureStrategy pure_strategy_from_json(const GameGraph& g, const Json& j);
MaxPureStrategy max_strategy_from_json(const GameGraph& g, const Json& j);

/// {"sigma1": {...}, "sigma2": {...}, "alpha": "<decimal>"}
Json switching_to_json(const GameGraph& g, const SwitchingStrategy& s);
SwitchingStrategy switching_from_json(const GameGraph& g, const Json& j);

/// {name: {successor-name: "num/den"}}
Json rand_strategy_to_json(const GameGraph& g, const RandStrategy& rho);
RandStrategy rand_strategy_from_json(const GameGraph& g, const Json& j);

Json bound_to_json(const ProbabilityBound& pb);
Json params_to_json(const GraphParams& p);

/// {name: "num/den" | "+inf"}
Json expectations_to_json(const GameGraph& g, const ExpectationVector& e);

Json optimality_to_json(const GameGraph& g, const OptimalityReport& r);
Json sim_report_to_json(const SimReport& r);

}  // namespace spg
