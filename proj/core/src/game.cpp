#include "spg/game.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <utility>

namespace spg {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

}  // namespace

std::string_view to_string(Owner owner) {
  switch (owner) {
    case Owner::Min: return "min";
    case Owner::Max: return "max";
    case Owner::Target: return "target";
  }
  return "?";
}

GameGraph::GameGraph(std::vector<std::string> names, std::vector<Owner> owners,
                     std::vector<Edge> edges)
    : names_(std::move(names)), owners_(std::move(owners)), edges_(std::move(edges)) {
  if (names_.size() != owners_.size()) {
    throw ValidationError("names and owners differ in length");
  }
  const std::size_t n = owners_.size();
  for (VertexId v = 0; v < n; ++v) {
    if (!valid_name(names_[v])) {
      throw ValidationError("invalid vertex name '" + names_[v] + "'");
    }
    if (!index_.emplace(names_[v], v).second) {
      throw ValidationError("duplicate vertex '" + names_[v] + "'");
    }
  }

  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::size_t> out_degree(n, 0);
  for (const Edge& e : edges_) {
    if (e.src >= n || e.dst >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (owners_[e.src] == Owner::Target) {
      throw ValidationError("edge out of target vertex '" + names_[e.src] + "'");
    }
    if (!seen.emplace(e.src, e.dst).second) {
      throw ValidationError("duplicate edge " + names_[e.src] + " -> " + names_[e.dst]);
    }
    if (e.weight == std::numeric_limits<Weight>::min()) {
      throw ValidationError("edge weight out of range");
    }
    ++out_degree[e.src];
    max_abs_weight_ = std::max(max_abs_weight_, std::abs(e.weight));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (owners_[v] != Owner::Target && out_degree[v] == 0) {
      throw ValidationError("deadlocked non-target vertex '" + names_[v] + "'");
    }
  }

  offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + out_degree[v];
  arcs_.resize(edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) arcs_[cursor[e.src]++] = Arc{e.dst, e.weight};
}

std::optional<VertexId> GameGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId GameGraph::id(std::string_view name) const {
  auto v = find(name);
  if (!v) throw DomainError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::span<const Arc> GameGraph::successors(VertexId v) const {
  if (v >= num_vertices()) throw std::out_of_range("vertex id out of range");
  return std::span<const Arc>(arcs_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::optional<Weight> GameGraph::weight(VertexId src, VertexId dst) const {
  for (const Arc& a : successors(src)) {
    if (a.dst == dst) return a.weight;
  }
  return std::nullopt;
}

GameGraph GameGraph::restrict_min_edges(const std::vector<std::vector<VertexId>>& allowed) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (owners_[e.src] == Owner::Min) {
      const auto& a = allowed.at(e.src);
      if (std::find(a.begin(), a.end(), e.dst) == a.end()) continue;
    }
    kept.push_back(e);
  }
  return GameGraph(names_, owners_, std::move(kept));
}

GameGraph GameGraph::induced(std::span<const VertexId> keep) const {
  std::vector<std::optional<VertexId>> renumber(num_vertices());
  std::vector<std::string> names;
  std::vector<Owner> owners;
  for (VertexId v : keep) {
    renumber.at(v) = names.size();
    names.push_back(names_[v]);
    owners.push_back(owners_[v]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (renumber[e.src] && renumber[e.dst]) {
      edges.push_back(Edge{*renumber[e.src], *renumber[e.dst], e.weight});
    }
  }
  return GameGraph(std::move(names), std::move(owners), std::move(edges));
}

VertexId GameBuilder::add(std::string name, Owner owner) {
  names_.push_back(std::move(name));
  owners_.push_back(owner);
  return names_.size() - 1;
}

GameBuilder& GameBuilder::edge(VertexId src, VertexId dst, Weight weight) {
  edges_.push_back(Edge{src, dst, weight});
  return *this;
}

Weight total_weight(const GameGraph& g, std::span<const VertexId> vertices) {
  ExtValue sum = ExtValue::finite(0);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto w = g.weight(vertices[i], vertices[i + 1]);
    if (!w) {
      throw DomainError("invalid play: " + g.name(vertices[i]) + " -> " +
                        g.name(vertices[i + 1]) + " is not an edge");
    }
    sum = sum.plus(*w);
  }
  return sum.value();
}

ExtValue total_payoff(const GameGraph& g, const Play& play) {
  if (play.vertices.empty()) throw DomainError("empty play");
  const Weight w = total_weight(g, play.vertices);
  if (play.non_terminating) return ExtValue::plus_inf();
  if (!g.is_target(play.vertices.back())) {
    throw DomainError("play does not end in a target vertex");
  }
  return ExtValue::finite(w);
}

}  // namespace spg
