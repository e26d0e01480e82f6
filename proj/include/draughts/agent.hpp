#pragma once

#include "draughts/board.hpp"
#include "draughts/rng.hpp"

namespace draughts {

// Expertise pair: d is the probability that a requested defensive move
// actually looks for menaced pieces, o the probability that a requested
// offensive move actually looks for a capture. Both in [0, 1].
struct Expertise {
    double d = 0.0;
    double o = 0.0;
};

enum class Strategy : uint8_t {
    // Per turn: offensive move with probability theta, defensive move
    // with probability 1 - theta.
    Complementary,
    // Capture whenever a capture exists, defensive move otherwise.
    FullyOffensive,
};

struct AgentSpec {
    Expertise expertise;
    Strategy strategy = Strategy::Complementary;
    double theta = 0.0;  // used by Complementary only

    static AgentSpec complementary(double d, double o, double theta) {
        return {{d, o}, Strategy::Complementary, theta};
    }
    static AgentSpec fully_offensive(double d) {
        return {{d, 1.0}, Strategy::FullyOffensive, 0.0};
    }
};

// Uniform draw over legal_moves(state). Exactly one index draw is consumed
// even when a single move exists. Throws std::logic_error with no legal
// move (the caller must have terminated the game already).
Move random_move(const GameState& state, RandomSource& rng);

// With probability d the player plays the menace-avoidance cascade: a
// uniform draw over save_moves(state) when a menaced piece can flee,
// otherwise over safe_moves(state) so no piece walks into a capture,
// otherwise a plain random move. With probability 1-d: random move. The
// d-coin is drawn first, then the index.
Move defensive_move(const GameState& state, double d, RandomSource& rng);

// With probability o: pick uniformly among captures_available(state),
// falling back to a random move when there is nothing to capture. With
// probability 1-o: random move. The o-coin is drawn first, then the index.
Move offensive_move(const GameState& state, double o, RandomSource& rng);

// Dispatches on the agent's strategy. Complementary draws the theta-coin
// first (offensive on success, defensive otherwise); FullyOffensive
// captures unconditionally when possible and plays a defensive move
// otherwise. Coins with p in {0, 1} consume no draw, so degenerate
// strategies are trace-identical to the pure move they reduce to.
Move choose_move(const GameState& state, const AgentSpec& agent, RandomSource& rng);

}  // namespace draughts
