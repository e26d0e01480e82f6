#pragma once

#include <cstdint>
#include <vector>

#include "draughts/agent.hpp"
#include "draughts/board.hpp"
#include "draughts/rng.hpp"

namespace draughts {

constexpr int kDefaultMaxPlies = 10000;

struct MatchConfig {
    AgentSpec agent1;
    AgentSpec agent2;
    int max_plies = kDefaultMaxPlies;
    uint64_t seed = 0;
    bool keep_trajectory = true;
};

enum class Winner : uint8_t { PlayerOne = 0, PlayerTwo = 1, Draw = 2 };
enum class EndReason : uint8_t { Elimination = 0, Stalemate = 1, Cap = 2 };

struct MatchRecord {
    Winner winner = Winner::Draw;
    int tau = 0;  // total plies played
    Player first_mover = Player::One;
    EndReason ended_by = EndReason::Cap;
    // v(t) = advantage after ply t and whether ply t captured, t = 1..tau.
    // Empty when the match ran with keep_trajectory = false.
    std::vector<int8_t> v_trajectory;
    std::vector<uint8_t> capture_plies;
};

enum class Retention : uint8_t {
    CountsOnly,    // aggregate counters only
    Summaries,     // per-match winner/tau/first mover, no trajectories
    Trajectories,  // full v(t) and capture markers
};

struct BatchResult {
    long n = 0;
    long wins1 = 0;
    long wins2 = 0;
    long draws = 0;
    std::vector<MatchRecord> records;  // empty under Retention::CountsOnly
};

// Plays one match. The first draw of the match's RandomSource selects the
// first mover uniformly; turns then alternate with each move chosen by the
// side to move's agent. A match that reaches max_plies is a Draw with
// ended_by = Cap; every other match ends decisively.
MatchRecord play_match(const MatchConfig& config);

// Runs n independent matches with per-index seeds derive_match_seed(
// master_seed, index). Results are bit-identical for any jobs value (<= 0
// selects the hardware thread count): workers write into per-index slots
// and the counters are order-independent sums.
BatchResult run_batch(const AgentSpec& agent1, const AgentSpec& agent2, long n,
                      uint64_t master_seed, int max_plies = kDefaultMaxPlies,
                      Retention retention = Retention::Summaries, int jobs = 1);

}  // namespace draughts
