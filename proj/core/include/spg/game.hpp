#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spg/errors.hpp"
#include "spg/ext_value.hpp"

namespace spg {

/// Dense vertex index, 0..num_vertices()-1, assigned in declaration order.
using VertexId = std::size_t;

enum class Owner : std::uint8_t { Min, Max, Target };

std::string_view to_string(Owner owner);

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Outgoing edge as stored in the adjacency index.
struct Arc {
  VertexId dst = 0;
  Weight weight = 0;
};

/// Immutable, validated shortest-path game graph.
///
/// Invariants checked on construction: names match [A-Za-z0-9_]+ and are
/// unique, no edge leaves a target vertex, every non-target vertex has at
/// least one successor, and there is at most one edge per ordered pair.
class GameGraph {
 public:
  GameGraph() = default;
  GameGraph(std::vector<std::string> names, std::vector<Owner> owners, std::vector<Edge> edges);

  std::size_t num_vertices() const { return owners_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  Owner owner(VertexId v) const { return owners_.at(v); }
  bool is_target(VertexId v) const { return owner(v) == Owner::Target; }
  bool is_min(VertexId v) const { return owner(v) == Owner::Min; }
  bool is_max(VertexId v) const { return owner(v) == Owner::Max; }

  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;
  /// Like find(), but throws DomainError for unknown names.
  VertexId id(std::string_view name) const;

  /// Successors of v in edge-declaration order.
  std::span<const Arc> successors(VertexId v) const;
  std::optional<Weight> weight(VertexId src, VertexId dst) const;
  bool has_edge(VertexId src, VertexId dst) const { return weight(src, dst).has_value(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Owner>& owners() const { return owners_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Greatest absolute edge weight (0 for a graph without edges).
  Weight max_abs_weight() const { return max_abs_weight_; }

  /// Copy of this graph where each Min vertex v keeps only the edges to
  /// allowed[v]. Entries for other vertices are ignored.
  GameGraph restrict_min_edges(const std::vector<std::vector<VertexId>>& allowed) const;

  /// Subgraph induced by `keep` (ids renumbered in the order given).
  GameGraph induced(std::span<const VertexId> keep) const;

  friend bool operator==(const GameGraph& a, const GameGraph& b) {
    return a.names_ == b.names_ && a.owners_ == b.owners_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Owner> owners_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  std::unordered_map<std::string, VertexId> index_;
  Weight max_abs_weight_ = 0;
};

/// Incremental construction helper; build() validates.
class GameBuilder {
 public:
  VertexId add(std::string name, Owner owner);
  VertexId min(std::string name) { return add(std::move(name), Owner::Min); }
  VertexId max(std::string name) { return add(std::move(name), Owner::Max); }
  VertexId target(std::string name) { return add(std::move(name), Owner::Target); }
  GameBuilder& edge(VertexId src, VertexId dst, Weight weight);

  GameGraph build() const { return GameGraph(names_, owners_, edges_); }

 private:
  std::vector<std::string> names_;
  std::vector<Owner> owners_;
  std::vector<Edge> edges_;
};

/// A finite sequence of vertices. `non_terminating` marks a prefix standing
/// in for an infinite play that never reaches the target.
struct Play {
  std::vector<VertexId> vertices;
  bool non_terminating = false;
};

/// Sum of edge weights along any finite play. Throws DomainError on a step
/// that is not an edge.
Weight total_weight(const GameGraph& g, std::span<const VertexId> vertices);

/// Total payoff: total weight for a play ending in a target vertex, +inf for a
/// play flagged non-terminating. Throws DomainError for an invalid play or an
/// unflagged play that does not end in a target.
ExtValue total_payoff(const GameGraph& g, const Play& play);

}  // namespace spg
