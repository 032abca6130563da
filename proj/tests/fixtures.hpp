#pragma once

#include <string>

#include "spg/game.hpp"
#include "spg/game_io.hpp"

namespace spg::testing {

inline std::string data_path(const std::string& file) {
  return std::string(SPG_TEST_DATA_DIR) + "/" + file;
}

inline GameGraph fig(int k) { return load_game(data_path("fig" + std::to_string(k) + ".spg")); }

}  // namespace spg::testing
