#include "draughts/agent.hpp"

#include <stdexcept>

namespace draughts {

Move random_move(const GameState& state, RandomSource& rng) {
    const MoveList moves = legal_moves(state);
    if (moves.empty()) throw std::logic_error("random_move: no legal move");
    return moves[rng.uniform_index(uint32_t(moves.size()))];
}

Move defensive_move(const GameState& state, double d, RandomSource& rng) {
    if (rng.bernoulli(d)) {
        // flee an existing menace first; with nothing to rescue (or no
        // rescue possible), at least avoid stepping into a capture
        const MoveList saves = save_moves(state);
        if (!saves.empty()) return saves[rng.uniform_index(uint32_t(saves.size()))];
        const MoveList safe = safe_moves(state);
        if (!safe.empty()) return safe[rng.uniform_index(uint32_t(safe.size()))];
    }
    return random_move(state, rng);
}

Move offensive_move(const GameState& state, double o, RandomSource& rng) {
    if (rng.bernoulli(o)) {
        const MoveList captures = captures_available(state);
        if (!captures.empty())
            return captures[rng.uniform_index(uint32_t(captures.size()))];
    }
    return random_move(state, rng);
}

Move choose_move(const GameState& state, const AgentSpec& agent, RandomSource& rng) {
    switch (agent.strategy) {
        case Strategy::Complementary:
            if (rng.bernoulli(agent.theta))
                return offensive_move(state, agent.expertise.o, rng);
            return defensive_move(state, agent.expertise.d, rng);
        case Strategy::FullyOffensive: {
            const MoveList captures = captures_available(state);
            if (!captures.empty())
                return captures[rng.uniform_index(uint32_t(captures.size()))];
            return defensive_move(state, agent.expertise.d, rng);
        }
    }
    throw std::logic_error("choose_move: unknown strategy");
}

}  // namespace draughts
