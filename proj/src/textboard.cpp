#include "draughts/textboard.hpp"

#include <stdexcept>

namespace draughts {

std::string serialize_position(const GameState& state) {
    std::string out;
    out.reserve(9 * 9);
    for (int line = 0; line < 8; ++line) {
        const int row = 7 - line;
        for (int col = 0; col < 8; ++col) {
            if (!playable(row, col)) {
                out += '#';
                continue;
            }
            switch (state.board[square_at(row, col)]) {
                case Cell::Empty: out += '.'; break;
                case Cell::One: out += '1'; break;
                case Cell::Two: out += '2'; break;
            }
        }
        out += '\n';
    }
    out += state.to_move == Player::One ? '1' : '2';
    out += '\n';
    return out;
}

static std::runtime_error parse_error(int line, const std::string& what) {
    return std::runtime_error("position parse error, line " + std::to_string(line + 1) +
                              ": " + what);
}

GameState parse_position(const std::string& text) {
    GameState st;
    st.board.fill(Cell::Empty);

    size_t pos = 0;
    for (int line = 0; line < 9; ++line) {
        const size_t eol = text.find('\n', pos);
        std::string row_text = eol == std::string::npos ? text.substr(pos)
                                                        : text.substr(pos, eol - pos);
        if (line < 8) {
            if (row_text.size() != 8) throw parse_error(line, "expected 8 characters");
            const int row = 7 - line;
            for (int col = 0; col < 8; ++col) {
                const char ch = row_text[col];
                if (!playable(row, col)) {
                    if (ch != '#') throw parse_error(line, "light square must be '#'");
                    continue;
                }
                Cell cell;
                switch (ch) {
                    case '.': cell = Cell::Empty; break;
                    case '1': cell = Cell::One; break;
                    case '2': cell = Cell::Two; break;
                    default: throw parse_error(line, "dark square must be '.', '1' or '2'");
                }
                st.board[square_at(row, col)] = cell;
            }
        } else {
            if (row_text == "1") st.to_move = Player::One;
            else if (row_text == "2") st.to_move = Player::Two;
            else throw parse_error(line, "side to move must be '1' or '2'");
        }
        if (eol == std::string::npos) {
            if (line < 8) throw parse_error(line + 1, "unexpected end of input");
            pos = text.size();
        } else {
            pos = eol + 1;
        }
    }
    if (pos != text.size()) throw std::runtime_error("position parse error: trailing data");

    refresh_derived(st);
    return st;
}

}  // namespace draughts
