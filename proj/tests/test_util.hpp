#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "draughts/board.hpp"
#include "draughts/rng.hpp"

namespace testutil {

// Independent move oracle: row/col arithmetic over every piece, every
// diagonal, step and jump. No shared tables with the production generator;
// results are compared as sets of (from, to, captured).
inline std::set<std::tuple<int, int, int>> oracle_move_set(const draughts::GameState& st) {
    using namespace draughts;
    std::set<std::tuple<int, int, int>> out;
    const Cell own = cell_of(st.to_move);
    const Cell opp = cell_of(opponent(st.to_move));
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            if (!playable(r, c) || st.board[square_at(r, c)] != own) continue;
            for (int dr : {+1, -1}) {
                for (int dc : {+1, -1}) {
                    const int r1 = r + dr, c1 = c + dc;
                    if (!playable(r1, c1)) continue;
                    const Cell adj = st.board[square_at(r1, c1)];
                    if (adj == Cell::Empty) {
                        out.insert({square_at(r, c), square_at(r1, c1), int(kNoSquare)});
                    } else if (adj == opp) {
                        const int r2 = r + 2 * dr, c2 = c + 2 * dc;
                        if (playable(r2, c2) && st.board[square_at(r2, c2)] == Cell::Empty)
                            out.insert(
                                {square_at(r, c), square_at(r2, c2), square_at(r1, c1)});
                    }
                }
            }
        }
    }
    return out;
}

inline std::set<std::tuple<int, int, int>> move_set(const draughts::MoveList& moves) {
    std::set<std::tuple<int, int, int>> out;
    for (const draughts::Move& m : moves) out.insert({m.from, m.to, int(m.captured)});
    return out;
}

// Random playout sampler; every visited ongoing state is reachable from
// the initial position by construction.
inline std::vector<draughts::GameState> sample_reachable_states(size_t count,
                                                                uint64_t seed) {
    using namespace draughts;
    std::vector<GameState> states;
    RandomSource rng(seed);
    while (states.size() < count) {
        GameState st =
            initial_state(rng.uniform_index(2) == 0 ? Player::One : Player::Two);
        while (st.ongoing() && st.ply < 2000 && states.size() < count) {
            states.push_back(st);
            const MoveList moves = legal_moves(st);
            st = apply_move(st, moves[rng.uniform_index(uint32_t(moves.size()))]);
        }
    }
    return states;
}

// Player One at (3,4) can jump the lone defender at (4,5); three quiet
// moves besides. Both pieces are menaced, each by the other.
inline const std::string kCaptureFixture =
    ".#.#.#.#\n"
    "#.#.#.#.\n"
    ".#.#.#.#\n"
    "#.#.#2#.\n"
    ".#.#1#.#\n"
    "#.#.#.#.\n"
    ".#.#.#.#\n"
    "#.#.#.#.\n"
    "1\n";

// Menaced piece at (3,2): stepping to (4,3) stays covered by (5,4), the
// other three moves (one of them the capture of (4,1)) are safe. The free
// piece at (0,1) pads the move list to 6, so the save-move mass under a
// uniform random move is 3/6.
inline const std::string kMenaceFixture =
    ".#.#.#.#\n"
    "#.#.#.#.\n"
    ".#.#2#.#\n"
    "#2#.#2#.\n"
    ".#1#.#.#\n"
    "#.#.#.#.\n"
    ".#.#.#.#\n"
    "#1#.#.#.\n"
    "1\n";

// Exactly 5 legal moves for Player One, one of which is a capture: the
// corner piece at (7,0) adds a single quiet move to the capture fixture.
inline const std::string kOffensiveFixture =
    "1#.#.#.#\n"
    "#.#.#.#.\n"
    ".#.#.#.#\n"
    "#.#.#2#.\n"
    ".#.#1#.#\n"
    "#.#.#.#.\n"
    ".#.#.#.#\n"
    "#.#.#.#.\n"
    "1\n";

// No menace anywhere, but Player One stepping from (3,2) to (4,3) would
// walk into the coverage of the piece on (5,4). 6 legal moves, 5 safe.
inline const std::string kUnsafeStepFixture =
    ".#.#.#.#\n"
    "#.#.#.#.\n"
    ".#.#2#.#\n"
    "#.#.#.#.\n"
    ".#1#.#.#\n"
    "#.#.#.#.\n"
    ".#.#.#.#\n"
    "#1#.#.#.\n"
    "1\n";

// Player One's only piece has a single legal move (SE from the top corner).
inline const std::string kSingleMoveFixture =
    "1#.#.#.#\n"
    "#.#.#.#.\n"
    ".#.#.#.#\n"
    "#.#.#.#.\n"
    ".#.#.#.#\n"
    "#.#.#.#.\n"
    ".#.#.#.#\n"
    "#.#.#.#2\n"
    "1\n";

}  // namespace testutil
