#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "draughts/agent.hpp"
#include "draughts/match.hpp"

namespace draughts {

struct SweepGrid {
    std::vector<double> theta_values;  // strictly ascending, within [0, 1]
    long n_per_cell = 100000;

    // 0, 0.05, ..., 1.0 (21 values), 1e5 matches per cell.
    static SweepGrid default_grid();
    static SweepGrid regular(double step, long n_per_cell);

    int size() const { return int(theta_values.size()); }
    // Index of a theta value on the grid, -1 if absent (1e-9 tolerance).
    int index_of(double theta) const;
    void validate() const;
};

// Normalized winning matrix over the (theta1, theta2) grid. Rows follow
// theta1 (player 1), columns theta2 (player 2); elements lie in [-1, 1]
// with positive values favoring player 1. Draws count as zero
// contribution; their counts are kept alongside.
struct WinningMatrix {
    SweepGrid grid;
    Expertise expertise1;
    Expertise expertise2;
    uint64_t master_seed = 0;
    std::vector<double> elements;   // row-major
    std::vector<long> draw_counts;  // row-major

    double at(int row, int col) const { return elements[size_t(row) * grid.size() + col]; }
    long draws_at(int row, int col) const {
        return draw_counts[size_t(row) * grid.size() + col];
    }
    // Upper bound on the per-cell standard error; the per-match summand
    // is bounded by 1 in magnitude.
    double sigma() const { return 1.0 / std::sqrt(double(grid.n_per_cell)); }
};

// (wins1 - wins2) / n. Throws on n <= 0 or wins1 + wins2 > n.
double matrix_element(long wins1, long wins2, long n);

// Runs one batch per cell with Complementary strategies and the per-cell
// seed derive_match_seed(master_seed, row * 1000 + column), so any cell is
// recomputable in isolation and the matrix is identical under any
// parallel schedule.
WinningMatrix build_winning_matrix(Expertise e1, Expertise e2, const SweepGrid& grid,
                                   uint64_t master_seed,
                                   int max_plies = kDefaultMaxPlies, int jobs = 1);

uint64_t cell_seed(uint64_t master_seed, int row, int col);

// Theta values maximizing for_player's signed element along the
// opponent's fixed theta, as the set of all grid values within
// tolerance_sigmas * sigma() of the maximum (ascending). Throws when
// opponent_theta is not on the grid.
std::vector<double> best_response(const WinningMatrix& matrix, Player for_player,
                                  double opponent_theta,
                                  double tolerance_sigmas = 2.0);

}  // namespace draughts
