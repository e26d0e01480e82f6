#pragma once

#include <string>

#include "draughts/board.hpp"

namespace draughts {

// Plain-text position format, mainly for test fixtures:
//   - 8 lines of 8 characters; line 0 shows row 7, line 7 shows row 0.
//   - '#' marks unplayable light squares, '.' an empty dark square,
//     '1'/'2' a piece of the respective player.
//   - a 9th line holding '1' or '2', the side to move.
// Every line is '\n'-terminated. serialize_position(parse_position(text))
// reproduces canonical text byte for byte; ply is not part of the format
// and parses as 0, with status recomputed from the board.
std::string serialize_position(const GameState& state);

GameState parse_position(const std::string& text);

}  // namespace draughts
