#include "draughts/match.hpp"

#include <atomic>
#include <thread>

namespace draughts {

MatchRecord play_match(const MatchConfig& config) {
    RandomSource rng(config.seed);
    const Player first = rng.uniform_index(2) == 0 ? Player::One : Player::Two;

    GameState state = initial_state(first);
    MatchRecord rec;
    rec.first_mover = first;
    if (config.keep_trajectory) {
        rec.v_trajectory.reserve(64);
        rec.capture_plies.reserve(64);
    }

    while (state.ongoing() && state.ply < config.max_plies) {
        const AgentSpec& agent =
            state.to_move == Player::One ? config.agent1 : config.agent2;
        const Move move = choose_move(state, agent, rng);
        state = apply_move(state, move);
        if (config.keep_trajectory) {
            rec.v_trajectory.push_back(int8_t(advantage(state)));
            rec.capture_plies.push_back(move.is_capture() ? 1 : 0);
        }
    }

    rec.tau = state.ply;
    if (state.status.phase == Phase::Won) {
        rec.winner = state.status.winner == Player::One ? Winner::PlayerOne
                                                        : Winner::PlayerTwo;
        rec.ended_by = state.status.by_stalemate ? EndReason::Stalemate
                                                 : EndReason::Elimination;
    } else {
        rec.winner = Winner::Draw;
        rec.ended_by = EndReason::Cap;
    }
    return rec;
}

namespace {

struct Tally {
    long wins1 = 0;
    long wins2 = 0;
    long draws = 0;

    void add(Winner w) {
        if (w == Winner::PlayerOne) ++wins1;
        else if (w == Winner::PlayerTwo) ++wins2;
        else ++draws;
    }
};

}  // namespace

BatchResult run_batch(const AgentSpec& agent1, const AgentSpec& agent2, long n,
                      uint64_t master_seed, int max_plies, Retention retention,
                      int jobs) {
    if (n < 1) throw std::invalid_argument("run_batch: n must be >= 1");
    if (jobs <= 0) jobs = int(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (long(jobs) > n) jobs = int(n);

    BatchResult result;
    result.n = n;
    const bool keep = retention != Retention::CountsOnly;
    if (keep) result.records.resize(size_t(n));

    MatchConfig base;
    base.agent1 = agent1;
    base.agent2 = agent2;
    base.max_plies = max_plies;
    base.keep_trajectory = retention == Retention::Trajectories;

    auto run_range = [&](long index, Tally& tally) {
        MatchConfig cfg = base;
        cfg.seed = derive_match_seed(master_seed, uint64_t(index));
        MatchRecord rec = play_match(cfg);
        tally.add(rec.winner);
        if (keep) result.records[size_t(index)] = std::move(rec);
    };

    if (jobs == 1) {
        Tally tally;
        for (long i = 0; i < n; ++i) run_range(i, tally);
        result.wins1 = tally.wins1;
        result.wins2 = tally.wins2;
        result.draws = tally.draws;
        return result;
    }

    std::atomic<long> next{0};
    std::vector<Tally> tallies(static_cast<size_t>(jobs));
    std::vector<std::thread> workers;
    workers.reserve(size_t(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            Tally& tally = tallies[size_t(w)];
            for (;;) {
                const long i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= n) break;
                run_range(i, tally);
            }
        });
    }
    for (auto& t : workers) t.join();
    for (const Tally& t : tallies) {
        result.wins1 += t.wins1;
        result.wins2 += t.wins2;
        result.draws += t.draws;
    }
    return result;
}

}  // namespace draughts
