#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace draughts {

// Board geometry: 8x8 sites, only the 32 dark squares ((row+col) odd) are
// playable and represented. Square index i maps to
//   row = i / 4,  col = 2*(i % 4) + (row even ? 1 : 0)
// so indices 0..3 sit on row 0 and 28..31 on row 7. Player One's pieces
// start on rows 0-2, Player Two's on rows 5-7.
constexpr int kNumSquares = 32;
constexpr uint8_t kNoSquare = 0xFF;

using Square = uint8_t;

constexpr int square_row(int index) { return index / 4; }
constexpr int square_col(int index) {
    const int row = index / 4;
    return 2 * (index % 4) + (row % 2 == 0 ? 1 : 0);
}
constexpr bool playable(int row, int col) {
    return row >= 0 && row < 8 && col >= 0 && col < 8 && (row + col) % 2 == 1;
}
constexpr int square_at(int row, int col) {  // requires playable(row, col)
    return row * 4 + col / 2;
}

enum class Player : uint8_t { One = 0, Two = 1 };

constexpr Player opponent(Player p) {
    return p == Player::One ? Player::Two : Player::One;
}
constexpr int player_index(Player p) { return int(p); }

enum class Cell : uint8_t { Empty = 0, One = 1, Two = 2 };

constexpr Cell cell_of(Player p) { return p == Player::One ? Cell::One : Cell::Two; }

using Board = std::array<Cell, kNumSquares>;

// Movement directions in fixed enumeration order: NE, NW, SE, SW, where
// north is +row and east is +col. dir k and dir 3-k are opposite, which
// the capture geometry relies on.
constexpr int kNumDirections = 4;
constexpr int kDirRow[kNumDirections] = {+1, +1, -1, -1};
constexpr int kDirCol[kNumDirections] = {+1, -1, +1, -1};

namespace detail {
using StepTable = std::array<std::array<uint8_t, kNumDirections>, kNumSquares>;

constexpr StepTable make_step_table(int distance) {
    StepTable t{};
    for (int s = 0; s < kNumSquares; ++s) {
        for (int k = 0; k < kNumDirections; ++k) {
            const int r = square_row(s) + distance * kDirRow[k];
            const int c = square_col(s) + distance * kDirCol[k];
            t[s][k] = playable(r, c) ? uint8_t(square_at(r, c)) : kNoSquare;
        }
    }
    return t;
}

inline constexpr StepTable kStepTo = make_step_table(1);
inline constexpr StepTable kJumpTo = make_step_table(2);
}  // namespace detail

// A simple move slides to an empty adjacent dark square; a capture jumps
// over one adjacent opponent piece onto the empty square beyond it. At
// most one piece is captured per move and there is no crowning.
struct Move {
    Square from = kNoSquare;
    Square to = kNoSquare;
    Square captured = kNoSquare;  // kNoSquare for a simple move

    bool is_capture() const { return captured != kNoSquare; }
    bool operator==(const Move&) const = default;
};

// Fixed-capacity move container; 12 pieces x 4 directions bounds the count.
class MoveList {
public:
    static constexpr int kCapacity = 48;

    void push_back(Move m) { moves_[size_++] = m; }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    const Move& operator[](int i) const { return moves_[i]; }
    const Move* begin() const { return moves_.data(); }
    const Move* end() const { return moves_.data() + size_; }

private:
    std::array<Move, kCapacity> moves_;
    int size_ = 0;
};

enum class Phase : uint8_t { Ongoing = 0, Won = 1, DrawCapped = 2 };

struct Status {
    Phase phase = Phase::Ongoing;
    Player winner = Player::One;  // meaningful only when phase == Won
    bool by_stalemate = false;    // meaningful only when phase == Won

    bool operator==(const Status&) const = default;
};

struct GameState {
    Board board{};
    Player to_move = Player::One;
    int ply = 0;  // moves applied so far; one unit per single player's move
    Status status{};
    std::array<int8_t, 2> piece_count{0, 0};  // cache, kept in sync by apply_move

    bool ongoing() const { return status.phase == Phase::Ongoing; }
    bool operator==(const GameState&) const = default;
};

// Standard starting occupancy (12 pieces per player on their three home
// rows), ply 0, given side to move.
GameState initial_state(Player first_mover);

// All legal moves for the side to move, ordered by from-square index and
// then direction (NE, NW, SE, SW). Empty when none exist; termination is
// the caller's concern.
MoveList legal_moves(const GameState& state);

// The capture-kind subset of legal_moves, in the same order.
MoveList captures_available(const GameState& state);

bool has_any_legal_move(const Board& board, Player side);

// A piece is menaced when the opponent, if it were to move, could capture
// it: some adjacent square holds an opponent piece and the square directly
// opposite is empty.
bool is_menaced(const Board& board, int square, Player owner);

// Bitmask over square indices of side's menaced pieces.
uint32_t menaced_mask(const Board& board, Player side);

// Menaced squares of side, ascending, regardless of whose turn it is.
std::vector<Square> menaced_pieces(const GameState& state, Player side);

// Legal moves of currently menaced pieces of the side to move after which
// the moved piece is no longer menaced. Only the moved piece's safety is
// evaluated. Subset of legal_moves, same order.
MoveList save_moves(const GameState& state);

// Legal moves of the side to move after which the moved piece is not
// menaced, i.e. moves that do not walk into a capture. Subset of
// legal_moves, same order.
MoveList safe_moves(const GameState& state);

// Applies a legal move, flips the side to move, advances the ply clock and
// updates the termination status: a player with no pieces, or with pieces
// but no legal move, loses. Throws std::logic_error for an illegal move or
// a non-ongoing state (harness bug, not a game outcome).
GameState apply_move(const GameState& state, Move move);

// Player One's piece count minus Player Two's, in [-12, 12].
int advantage(const GameState& state);

// Recomputes status and piece counts from the raw board (used when a state
// is constructed from scratch rather than by apply_move).
void refresh_derived(GameState& state);

}  // namespace draughts
