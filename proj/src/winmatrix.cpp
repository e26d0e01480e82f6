#include "draughts/winmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace draughts {

SweepGrid SweepGrid::default_grid() { return regular(0.05, 100000); }

SweepGrid SweepGrid::regular(double step, long n_per_cell) {
    SweepGrid g;
    g.n_per_cell = n_per_cell;
    for (double v = 0.0; v < 1.0 - step / 2; v += step) g.theta_values.push_back(v);
    g.theta_values.push_back(1.0);
    return g;
}

int SweepGrid::index_of(double theta) const {
    for (int i = 0; i < size(); ++i)
        if (std::abs(theta_values[size_t(i)] - theta) < 1e-9) return i;
    return -1;
}

void SweepGrid::validate() const {
    if (theta_values.empty()) throw std::invalid_argument("sweep grid: empty theta grid");
    if (n_per_cell < 1) throw std::invalid_argument("sweep grid: n_per_cell must be >= 1");
    for (size_t i = 0; i < theta_values.size(); ++i) {
        const double v = theta_values[i];
        if (v < 0.0 || v > 1.0)
            throw std::invalid_argument("sweep grid: theta outside [0, 1]");
        if (i > 0 && v <= theta_values[i - 1])
            throw std::invalid_argument("sweep grid: theta values must be strictly ascending");
    }
}

double matrix_element(long wins1, long wins2, long n) {
    if (n <= 0) throw std::invalid_argument("matrix_element: n must be positive");
    if (wins1 < 0 || wins2 < 0 || wins1 + wins2 > n)
        throw std::invalid_argument("matrix_element: invalid win counts");
    return double(wins1 - wins2) / double(n);
}

uint64_t cell_seed(uint64_t master_seed, int row, int col) {
    return derive_match_seed(master_seed, uint64_t(row) * 1000 + uint64_t(col));
}

WinningMatrix build_winning_matrix(Expertise e1, Expertise e2, const SweepGrid& grid,
                                   uint64_t master_seed, int max_plies, int jobs) {
    grid.validate();
    WinningMatrix m;
    m.grid = grid;
    m.expertise1 = e1;
    m.expertise2 = e2;
    m.master_seed = master_seed;
    const int k = grid.size();
    m.elements.resize(size_t(k) * k);
    m.draw_counts.resize(size_t(k) * k);
    for (int i = 0; i < k; ++i) {
        const AgentSpec a1 =
            AgentSpec::complementary(e1.d, e1.o, grid.theta_values[size_t(i)]);
        for (int j = 0; j < k; ++j) {
            const AgentSpec a2 =
                AgentSpec::complementary(e2.d, e2.o, grid.theta_values[size_t(j)]);
            const BatchResult batch =
                run_batch(a1, a2, grid.n_per_cell, cell_seed(master_seed, i, j),
                          max_plies, Retention::CountsOnly, jobs);
            m.elements[size_t(i) * k + j] =
                matrix_element(batch.wins1, batch.wins2, batch.n);
            m.draw_counts[size_t(i) * k + j] = batch.draws;
        }
    }
    return m;
}

std::vector<double> best_response(const WinningMatrix& matrix, Player for_player,
                                  double opponent_theta, double tolerance_sigmas) {
    const SweepGrid& grid = matrix.grid;
    const int fixed = grid.index_of(opponent_theta);
    if (fixed < 0)
        throw std::invalid_argument("best_response: opponent theta not on the grid");

    // Player 1 scans rows with the opponent's column fixed; player 2 scans
    // columns along the fixed row, with the element sign flipped since
    // positive favors player 1.
    std::vector<double> signed_values(size_t(grid.size()));
    for (int i = 0; i < grid.size(); ++i)
        signed_values[size_t(i)] = for_player == Player::One ? matrix.at(i, fixed)
                                                             : -matrix.at(fixed, i);

    const double best = *std::max_element(signed_values.begin(), signed_values.end());
    const double band = tolerance_sigmas * matrix.sigma();
    std::vector<double> out;
    for (int i = 0; i < grid.size(); ++i)
        if (signed_values[size_t(i)] >= best - band)
            out.push_back(grid.theta_values[size_t(i)]);
    return out;
}

}  // namespace draughts
