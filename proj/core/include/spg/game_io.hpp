#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "spg/game.hpp"

namespace spg {

/// Parses the line-oriented text format:
///
///   # comment
///   min <name> | max <name> | target <name>
///   edge <src> <dst> <integer-weight>
///
/// Vertex ids follow declaration order. Syntax problems, duplicate vertices,
/// unknown vertices in edges, duplicate edges and edges out of a target are
/// reported as ParseError with a line and column; a deadlocked vertex raises
/// ValidationError.
GameGraph parse_game(std::string_view text);

/// Inverse of parse_game: vertices in id order, then edges in declaration order.
std::string serialize_game(const GameGraph& g);

/// JSON mirror: {"vertices":[{"name","owner"}],"edges":[{"src","dst","w"}]}.
GameGraph parse_game_json(std::string_view text);
std::string game_to_json(const GameGraph& g);

/// Reads a game from disk; JSON is detected by a leading '{'.
GameGraph load_game(const std::filesystem::path& path);

}  // namespace spg
