#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "spg/game.hpp"
#include "spg/strategy.hpp"
#include "spg/values.hpp"

namespace spg {

enum class OptimalityReason { Ok, EarlyStationarityFailed, AttractorFailed };

std::string_view to_string(OptimalityReason r);

struct OptimalityReport {
  bool exists = false;
  OptimalityReason reason = OptimalityReason::Ok;
  std::optional<PureStrategy> optimal_strategy;
  /// f^(k-1) and f^(k) for k the number of finite-valued vertices, indexed
  /// like the input game (+inf at removed vertices).
  ValueVector f_prev;
  ValueVector f_last;
  /// Applications of F performed.
  std::size_t applications = 0;
};

/// Decides whether Min has an optimal memoryless strategy. Throws
/// DomainError if some vertex has value -inf.
OptimalityReport check_optimal_memoryless(const GameGraph& g);

/// The strategy of a positive report; throws DomainError otherwise.
PureStrategy extract_optimal(const GameGraph& g, const OptimalityReport& report);

}  // namespace spg
