#include "draughts/board.hpp"

#include <stdexcept>

namespace draughts {

using detail::kJumpTo;
using detail::kStepTo;

GameState initial_state(Player first_mover) {
    GameState st;
    st.board.fill(Cell::Empty);
    for (int s = 0; s < 12; ++s) st.board[s] = Cell::One;        // rows 0-2
    for (int s = 20; s < kNumSquares; ++s) st.board[s] = Cell::Two;  // rows 5-7
    st.to_move = first_mover;
    st.piece_count = {12, 12};
    return st;
}

static void moves_for_side(const Board& board, Player side, MoveList& out) {
    const Cell own = cell_of(side);
    for (int s = 0; s < kNumSquares; ++s) {
        if (board[s] != own) continue;
        for (int k = 0; k < kNumDirections; ++k) {
            const uint8_t adj = kStepTo[s][k];
            if (adj == kNoSquare) continue;
            if (board[adj] == Cell::Empty) {
                out.push_back({Square(s), adj, kNoSquare});
            } else if (board[adj] != own) {
                const uint8_t land = kJumpTo[s][k];
                if (land != kNoSquare && board[land] == Cell::Empty)
                    out.push_back({Square(s), land, adj});
            }
        }
    }
}

MoveList legal_moves(const GameState& state) {
    MoveList out;
    moves_for_side(state.board, state.to_move, out);
    return out;
}

MoveList captures_available(const GameState& state) {
    MoveList out;
    const Cell own = cell_of(state.to_move);
    for (int s = 0; s < kNumSquares; ++s) {
        if (state.board[s] != own) continue;
        for (int k = 0; k < kNumDirections; ++k) {
            const uint8_t adj = kStepTo[s][k];
            if (adj == kNoSquare || state.board[adj] == Cell::Empty || state.board[adj] == own)
                continue;
            const uint8_t land = kJumpTo[s][k];
            if (land != kNoSquare && state.board[land] == Cell::Empty)
                out.push_back({Square(s), land, adj});
        }
    }
    return out;
}

bool has_any_legal_move(const Board& board, Player side) {
    const Cell own = cell_of(side);
    for (int s = 0; s < kNumSquares; ++s) {
        if (board[s] != own) continue;
        for (int k = 0; k < kNumDirections; ++k) {
            const uint8_t adj = kStepTo[s][k];
            if (adj == kNoSquare) continue;
            if (board[adj] == Cell::Empty) return true;
            if (board[adj] != own) {
                const uint8_t land = kJumpTo[s][k];
                if (land != kNoSquare && board[land] == Cell::Empty) return true;
            }
        }
    }
    return false;
}

bool is_menaced(const Board& board, int square, Player owner) {
    const Cell opp = cell_of(opponent(owner));
    for (int k = 0; k < kNumDirections; ++k) {
        const uint8_t attacker = kStepTo[square][k];
        const uint8_t landing = kStepTo[square][3 - k];  // opposite diagonal
        if (attacker != kNoSquare && landing != kNoSquare && board[attacker] == opp &&
            board[landing] == Cell::Empty)
            return true;
    }
    return false;
}

uint32_t menaced_mask(const Board& board, Player side) {
    uint32_t mask = 0;
    const Cell own = cell_of(side);
    for (int s = 0; s < kNumSquares; ++s)
        if (board[s] == own && is_menaced(board, s, side)) mask |= uint32_t(1) << s;
    return mask;
}

std::vector<Square> menaced_pieces(const GameState& state, Player side) {
    std::vector<Square> out;
    uint32_t mask = menaced_mask(state.board, side);
    for (int s = 0; s < kNumSquares; ++s)
        if (mask >> s & 1) out.push_back(Square(s));
    return out;
}

static bool lands_safe(const Board& board, Player side, Move m) {
    Board b = board;
    b[m.from] = Cell::Empty;
    if (m.is_capture()) b[m.captured] = Cell::Empty;
    b[m.to] = cell_of(side);
    return !is_menaced(b, m.to, side);
}

MoveList save_moves(const GameState& state) {
    MoveList out;
    const Player side = state.to_move;
    const uint32_t menaced = menaced_mask(state.board, side);
    if (menaced == 0) return out;
    const MoveList all = legal_moves(state);
    for (const Move& m : all) {
        if (!(menaced >> m.from & 1)) continue;
        if (lands_safe(state.board, side, m)) out.push_back(m);
    }
    return out;
}

MoveList safe_moves(const GameState& state) {
    MoveList out;
    const Player side = state.to_move;
    for (const Move& m : legal_moves(state))
        if (lands_safe(state.board, side, m)) out.push_back(m);
    return out;
}

// Geometric legality check, equivalent to membership in legal_moves but O(1).
static bool move_is_legal(const Board& board, Player side, Move m) {
    if (m.from >= kNumSquares || m.to >= kNumSquares) return false;
    if (board[m.from] != cell_of(side) || board[m.to] != Cell::Empty) return false;
    for (int k = 0; k < kNumDirections; ++k) {
        if (m.is_capture()) {
            if (kStepTo[m.from][k] == m.captured && kJumpTo[m.from][k] == m.to)
                return board[m.captured] != Cell::Empty &&
                       board[m.captured] != cell_of(side);
        } else {
            if (kStepTo[m.from][k] == m.to) return true;
        }
    }
    return false;
}

GameState apply_move(const GameState& state, Move move) {
    if (!state.ongoing()) throw std::logic_error("apply_move: game is not ongoing");
    if (!move_is_legal(state.board, state.to_move, move))
        throw std::logic_error("apply_move: illegal move");

    GameState next = state;
    const Player mover = state.to_move;
    const Player other = opponent(mover);
    next.board[move.from] = Cell::Empty;
    next.board[move.to] = cell_of(mover);
    if (move.is_capture()) {
        next.board[move.captured] = Cell::Empty;
        next.piece_count[player_index(other)] -= 1;
    }
    next.to_move = other;
    next.ply = state.ply + 1;
    if (next.piece_count[player_index(other)] == 0) {
        next.status = {Phase::Won, mover, false};
    } else if (!has_any_legal_move(next.board, other)) {
        next.status = {Phase::Won, mover, true};
    } else {
        next.status = {Phase::Ongoing, Player::One, false};
    }
    return next;
}

int advantage(const GameState& state) {
    return int(state.piece_count[0]) - int(state.piece_count[1]);
}

void refresh_derived(GameState& state) {
    state.piece_count = {0, 0};
    for (Cell c : state.board) {
        if (c == Cell::One) state.piece_count[0] += 1;
        if (c == Cell::Two) state.piece_count[1] += 1;
    }
    const Player mover = state.to_move;
    if (state.piece_count[player_index(mover)] == 0) {
        state.status = {Phase::Won, opponent(mover), false};
    } else if (!has_any_legal_move(state.board, mover)) {
        state.status = {Phase::Won, opponent(mover), true};
    } else {
        state.status = {Phase::Ongoing, Player::One, false};
    }
}

}  // namespace draughts
