#include "spg/game_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace spg {

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    out.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return out;
}

bool is_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_';
    if (!ok) return false;
  }
  return true;
}

std::optional<Weight> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s.front() == '+') return std::nullopt;
  Weight v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct PendingEdge {
  Token src, dst;
  Weight weight;
  std::size_t line;
};

}  // namespace

GameGraph parse_game(std::string_view text) {
  std::vector<std::string> names;
  std::vector<Owner> owners;
  std::map<std::string, VertexId, std::less<>> ids;
  std::vector<PendingEdge> pending;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& kw = tokens[0];

    if (kw.text == "min" || kw.text == "max" || kw.text == "target") {
      if (tokens.size() != 2) {
        throw ParseError("expected '" + std::string(kw.text) + " <name>'", line_no,
                         tokens.size() > 2 ? tokens[2].column : kw.column + kw.text.size());
      }
      const Token& name = tokens[1];
      if (!is_name(name.text)) {
        throw ParseError("invalid vertex name '" + std::string(name.text) + "'", line_no,
                         name.column);
      }
      if (ids.count(name.text)) {
        throw ParseError("duplicate vertex '" + std::string(name.text) + "'", line_no,
                         name.column);
      }
      Owner owner = kw.text == "min"   ? Owner::Min
                    : kw.text == "max" ? Owner::Max
                                       : Owner::Target;
      ids.emplace(std::string(name.text), names.size());
      names.emplace_back(name.text);
      owners.push_back(owner);
    } else if (kw.text == "edge") {
      if (tokens.size() != 4) {
        throw ParseError("expected 'edge <src> <dst> <weight>'", line_no,
                         tokens.size() > 4 ? tokens[4].column : kw.column);
      }
      auto w = parse_int(tokens[3].text);
      if (!w) {
        throw ParseError("invalid integer weight '" + std::string(tokens[3].text) + "'",
                         line_no, tokens[3].column);
      }
      pending.push_back(PendingEdge{tokens[1], tokens[2], *w, line_no});
    } else {
      throw ParseError("unknown directive '" + std::string(kw.text) + "'", line_no, kw.column);
    }
    if (end == text.size()) break;
  }

  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const PendingEdge& pe : pending) {
    auto lookup = [&](const Token& t) {
      auto it = ids.find(t.text);
      if (it == ids.end()) {
        throw ParseError("unknown vertex '" + std::string(t.text) + "'", pe.line, t.column);
      }
      return it->second;
    };
    VertexId s = lookup(pe.src);
    VertexId d = lookup(pe.dst);
    if (owners[s] == Owner::Target) {
      throw ParseError("edge out of target vertex '" + names[s] + "'", pe.line, pe.src.column);
    }
    if (!seen.emplace(s, d).second) {
      throw ParseError("duplicate edge " + names[s] + " -> " + names[d], pe.line, pe.src.column);
    }
    edges.push_back(Edge{s, d, pe.weight});
  }
  return GameGraph(std::move(names), std::move(owners), std::move(edges));
}

std::string serialize_game(const GameGraph& g) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << to_string(g.owner(v)) << ' ' << g.name(v) << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << "edge " << g.name(e.src) << ' ' << g.name(e.dst) << ' ' << e.weight << '\n';
  }
  return out.str();
}

GameGraph parse_game_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    std::vector<std::string> names;
    std::vector<Owner> owners;
    std::map<std::string, VertexId, std::less<>> ids;
    for (const auto& v : doc.at("vertices")) {
      auto name = v.at("name").get<std::string>();
      auto owner = v.at("owner").get<std::string>();
      Owner o;
      if (owner == "min") o = Owner::Min;
      else if (owner == "max") o = Owner::Max;
      else if (owner == "target") o = Owner::Target;
      else throw ParseError("unknown owner '" + owner + "'");
      if (!ids.emplace(name, names.size()).second) {
        throw ParseError("duplicate vertex '" + name + "'");
      }
      names.push_back(std::move(name));
      owners.push_back(o);
    }
    std::vector<Edge> edges;
    for (const auto& e : doc.value("edges", nlohmann::json::array())) {
      auto lookup = [&](const std::string& n) {
        auto it = ids.find(n);
        if (it == ids.end()) throw ParseError("unknown vertex '" + n + "'");
        return it->second;
      };
      edges.push_back(Edge{lookup(e.at("src").get<std::string>()),
                           lookup(e.at("dst").get<std::string>()), e.at("w").get<Weight>()});
    }
    return GameGraph(std::move(names), std::move(owners), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed game JSON: ") + e.what());
  }
}

std::string game_to_json(const GameGraph& g) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    doc["vertices"].push_back({{"name", g.name(v)}, {"owner", std::string(to_string(g.owner(v)))}});
  }
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    doc["edges"].push_back({{"src", g.name(e.src)}, {"dst", g.name(e.dst)}, {"w", e.weight}});
  }
  return doc.dump(2);
}

GameGraph load_game(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_game_json(text);
  return parse_game(text);
}

}  // namespace spg
